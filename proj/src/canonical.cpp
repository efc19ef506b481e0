#include "diameterlab/canonical.hpp"

#include <algorithm>

namespace dlab {

PureComplex relabel(const PureComplex& c, const std::vector<int>& relabeling) {
    std::vector<Facet> facets;
    facets.reserve(c.size());
    for (const auto& f : c.facets) {
        Facet g(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) g[i] = relabeling[f[i]];
        std::sort(g.begin(), g.end());
        facets.push_back(std::move(g));
    }
    return PureComplex(c.n, c.d, std::move(facets));
}

namespace {

struct Search {
    const PureComplex& c;
    std::vector<int> used;         // used vertex ids
    std::vector<int> newlabel;     // -1 while unassigned
    std::vector<int> assignment;   // assignment[k] = old vertex given label k
    std::vector<std::vector<Facet>> best_list;  // singleton holder for "no best"
    std::vector<int> best_assignment;
    bool have_best = false;

    explicit Search(const PureComplex& cc) : c(cc), newlabel(cc.n, -1) {}

    // Lower bound on the final sorted facet list given the partial assignment:
    // unassigned vertices optimistically take the smallest labels still free.
    std::vector<Facet> optimistic(int next_label) const {
        std::vector<Facet> words;
        words.reserve(c.size());
        for (const auto& f : c.facets) {
            Facet w;
            int unassigned = 0;
            for (int v : f) {
                if (newlabel[v] >= 0)
                    w.push_back(newlabel[v]);
                else
                    ++unassigned;
            }
            std::sort(w.begin(), w.end());
            for (int t = 0; t < unassigned; ++t) w.push_back(next_label + t);
            words.push_back(std::move(w));
        }
        std::sort(words.begin(), words.end());
        return words;
    }

    void recurse(std::size_t depth) {
        if (depth == used.size()) {
            auto words = optimistic(static_cast<int>(depth));  // fully assigned
            if (!have_best || words < best_list.front()) {
                best_list.assign(1, std::move(words));
                best_assignment = assignment;
                have_best = true;
            }
            return;
        }
        for (int v : used) {
            if (newlabel[v] >= 0) continue;
            newlabel[v] = static_cast<int>(depth);
            assignment.push_back(v);
            auto lb = optimistic(static_cast<int>(depth) + 1);
            if (!have_best || lb <= best_list.front()) recurse(depth + 1);
            assignment.pop_back();
            newlabel[v] = -1;
        }
    }
};

}  // namespace

CanonicalForm canonical_form(const PureComplex& c, std::size_t cap) {
    Search search(c);
    search.used = c.used_vertices();
    if (search.used.size() > scaled_cap(cap))
        throw SizeLimitError("canonical_form: " + std::to_string(search.used.size()) +
                             " used vertices exceeds cap");
    search.recurse(0);

    std::vector<int> relabeling(c.n, -1);
    for (std::size_t k = 0; k < search.best_assignment.size(); ++k)
        relabeling[search.best_assignment[k]] = static_cast<int>(k);
    int next = static_cast<int>(search.used.size());
    for (int v = 0; v < c.n; ++v)
        if (relabeling[v] < 0) relabeling[v] = next++;

    if (c.size() == 0) {
        for (int v = 0; v < c.n; ++v) relabeling[v] = v;
        return {c, relabeling};
    }
    return {relabel(c, relabeling), relabeling};
}

}  // namespace dlab
