#include "diameterlab/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "diameterlab/canonical.hpp"
#include "diameterlab/complex_ops.hpp"
#include "diameterlab/constructions.hpp"
#include "diameterlab/diameter.hpp"

namespace dlab {

namespace {

std::vector<Facet> candidate_faces(const PureComplex& c, int k) {
    std::vector<Facet> out;
    for (const auto& s : all_faces(c))
        if (static_cast<int>(s.size()) <= k + 1) out.push_back(s);
    return out;  // all_faces is already lexicographically sorted
}

struct StrongSearch {
    int k;
    long long budget;
    long long nodes = 0;
    std::map<std::vector<Facet>, bool> memo;  // canonical facet list -> decision

    bool decide(const PureComplex& c, std::unique_ptr<SheddingTree>* cert) {
        if (++nodes > budget) throw BudgetError("is_k_decomposable: budget exceeded");
        if (c.size() == 1) {
            if (cert) {
                *cert = std::make_unique<SheddingTree>();
                (*cert)->leaf = true;
            }
            return true;
        }
        if (c.size() == 0) return false;
        auto key = canonical_form(c).complex.facets;
        auto it = memo.find(key);
        if (it != memo.end() && !(it->second && cert)) return it->second;

        for (const auto& s : candidate_faces(c, k)) {
            if (!is_deletion_pure(c, s)) continue;
            PureComplex del = deletion_complex(c, s);
            PureComplex lk = link(c, s);
            std::unique_ptr<SheddingTree> del_cert, lk_cert;
            if (!decide(del, cert ? &del_cert : nullptr)) continue;
            if (!decide(lk, cert ? &lk_cert : nullptr)) continue;
            memo[key] = true;
            if (cert) {
                *cert = std::make_unique<SheddingTree>();
                (*cert)->shedding_face = s;
                (*cert)->deletion = std::move(del_cert);
                (*cert)->link = std::move(lk_cert);
            }
            return true;
        }
        memo[key] = false;
        return false;
    }
};

}  // namespace

DecomposeResult is_k_decomposable(const PureComplex& c, int k, long long budget) {
    if (k < 0 || k > c.d - 1) throw InputError("is_k_decomposable: need 0 <= k <= d-1");
    StrongSearch search{k, budget};
    DecomposeResult result;
    result.decomposable = search.decide(c, &result.certificate);
    result.nodes = search.nodes;
    return result;
}

WeakDecomposeResult is_weakly_k_decomposable(const PureComplex& c, int k, long long budget) {
    if (k < 0 || k > c.d - 1) throw InputError("is_weakly_k_decomposable: need 0 <= k <= d-1");
    WeakDecomposeResult result;
    // State = surviving facet list; the complex after a sequence of deletions
    // is determined by the set of shed faces, so raw facet lists dedupe fully.
    std::map<std::vector<Facet>, bool> memo;
    long long nodes = 0;

    std::vector<Facet> sequence;
    auto decide = [&](auto&& self, const PureComplex& cur) -> bool {
        if (++nodes > budget) throw BudgetError("is_weakly_k_decomposable: budget exceeded");
        if (cur.size() == 1) return true;
        if (cur.size() == 0) return false;
        auto it = memo.find(cur.facets);
        if (it != memo.end()) {
            if (!it->second) return false;
            // need the sequence: fall through and recompute this branch
        }
        for (const auto& s : candidate_faces(cur, k)) {
            if (!is_deletion_pure(cur, s)) continue;
            sequence.push_back(s);
            if (self(self, deletion_complex(cur, s))) {
                memo[cur.facets] = true;
                return true;
            }
            sequence.pop_back();
        }
        memo[cur.facets] = false;
        return false;
    };
    result.decomposable = decide(decide, c);
    if (result.decomposable) result.shedding_sequence = sequence;
    result.nodes = nodes;
    result.states = static_cast<long long>(memo.size());
    return result;
}

bool verify_shedding_tree(const PureComplex& c, const SheddingTree& tree, int k) {
    if (tree.leaf) return c.size() == 1;
    const Facet& s = tree.shedding_face;
    if (static_cast<int>(s.size()) > k + 1 || s.empty()) return false;
    if (!is_face(c, s)) return false;
    if (!is_deletion_pure(c, s)) return false;
    if (!tree.deletion || !tree.link) return false;
    return verify_shedding_tree(deletion_complex(c, s), *tree.deletion, k) &&
           verify_shedding_tree(link(c, s), *tree.link, k);
}

bool verify_shedding_sequence(const PureComplex& c, const std::vector<Facet>& sequence, int k) {
    PureComplex cur = c;
    for (const auto& s : sequence) {
        if (cur.size() == 1) return false;  // sequence longer than needed
        if (static_cast<int>(s.size()) > k + 1 || s.empty()) return false;
        if (!is_face(cur, s)) return false;
        if (!is_deletion_pure(cur, s)) return false;
        cur = deletion_complex(cur, s);
    }
    return cur.size() == 1;
}

std::vector<DkCase> dk_obstruction_witness(int a, int b) {
    if (a < 2 || b < 2) throw InputError("dk_obstruction_witness: a,b >= 2");
    PureComplex nab = nabla(a, b);
    int m = a + b + 1;

    auto plus = [](int i) { return 2 * (i - 1); };
    auto minus = [](int i) { return 2 * (i - 1) + 1; };

    // Surviving full-dimensional facets named in the argument.
    std::vector<int> s_float, t_float;
    for (int i = b + 2; i <= m; ++i) s_float.push_back(i);
    for (int j = 2; j <= b + 1; ++j) t_float.push_back(j);
    Facet witness_a = nabla_facet(a, b, s_float, t_float);  // avoids +1,+2,-1
    std::vector<int> t_alt = {1, 2};
    for (int j = 4; j <= b + 1; ++j) t_alt.push_back(j);
    Facet witness_b = nabla_facet(a, b, s_float, t_alt);  // avoids +1,+2,-3

    // The uncovered ridge: common ridge of the two facets
    // {+1,+3..+(a+1),-(a+2)..-(a+b+1)} and {+2,+3..+(a+1),-(a+2)..-(a+b+1)}.
    Facet ridge;
    for (int i = 3; i <= a + 1; ++i) ridge.push_back(plus(i));
    for (int j = a + 2; j <= m; ++j) ridge.push_back(minus(j));
    std::sort(ridge.begin(), ridge.end());

    std::vector<DkCase> cases;
    auto run_case = [&](const std::string& name, const std::vector<Facet>& sheds,
                        const Facet& surviving) {
        DkCase dk;
        dk.name = name;
        dk.shed_vertices = sheds;
        PureComplex cur = nab;
        for (const auto& s : sheds) cur = deletion_complex(cur, s);
        dk.surviving_facet = surviving;
        dk.uncovered_ridge = ridge;
        bool facet_survives =
            std::binary_search(cur.facets.begin(), cur.facets.end(), surviving);
        // The ridge avoids every shed vertex, so it survives the face-level
        // deletions; with both covering facets gone it is a maximal face of
        // cardinality d-1, certifying non-pureness.
        bool ridge_avoids_sheds = true;
        for (const auto& s : sheds)
            for (int v : s)
                if (std::binary_search(ridge.begin(), ridge.end(), v)) ridge_avoids_sheds = false;
        bool ridge_uncovered = true;
        for (const auto& f : cur.facets)
            if (is_subset(ridge, f)) ridge_uncovered = false;
        bool ridge_is_face_of_original = is_face(nab, ridge);
        dk.non_pure =
            facet_survives && ridge_uncovered && ridge_avoids_sheds && ridge_is_face_of_original;
        cases.push_back(dk);
    };

    run_case("plus-plus", {{plus(1)}, {plus(2)}}, witness_a);
    run_case("plus-plus-minus-first", {{plus(1)}, {plus(2)}, {minus(1)}}, witness_a);
    run_case("plus-plus-minus-third", {{plus(1)}, {plus(2)}, {minus(3)}}, witness_b);
    return cases;
}

ProvanBilleraReport provan_billera_check(const PureComplex& c, int k) {
    ProvanBilleraReport report;
    auto strong = is_k_decomposable(c, k);
    report.decomposable = strong.decomposable;
    auto weak = is_weakly_k_decomposable(c, k);
    report.weakly_decomposable = weak.decomposable;
    report.diameter = dual_diameter(c).diameter;
    report.f_k = f_count(c, k);
    report.strong_bound = report.f_k - binomial(c.d, k + 1);
    report.weak_bound = 2 * report.f_k;
    if (report.decomposable) report.strong_ok = report.diameter <= report.strong_bound;
    if (report.weakly_decomposable) report.weak_ok = report.diameter <= report.weak_bound;
    return report;
}

}  // namespace dlab
