#include "diameterlab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "diameterlab/bounds.hpp"
#include "diameterlab/clm.hpp"
#include "diameterlab/complex_ops.hpp"
#include "diameterlab/constructions.hpp"
#include "diameterlab/decompose.hpp"
#include "diameterlab/diameter.hpp"
#include "diameterlab/induced_path.hpp"
#include "diameterlab/legal.hpp"
#include "diameterlab/nonpure.hpp"
#include "diameterlab/nonrevisiting.hpp"

namespace dlab {

namespace {

struct Checker {
    std::vector<CheckResult> results;

    template <typename F>
    void run(const std::string& name, F&& body) {
        CheckResult r;
        r.name = name;
        auto t0 = std::chrono::steady_clock::now();
        std::ostringstream detail;
        try {
            r.pass = body(detail);
        } catch (const std::exception& e) {
            r.pass = false;
            detail << "exception: " << e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.detail = detail.str();
        results.push_back(std::move(r));
    }
};

bool expect(std::ostringstream& os, bool cond, const std::string& what) {
    if (!cond) os << "FAILED: " << what << "; ";
    return cond;
}

PureComplex random_complex(int n, int d, std::mt19937_64& rng) {
    auto full = complete_complex(n, d);
    std::vector<Facet> facets;
    for (const auto& f : full.facets)
        if (rng() % 2 == 0) facets.push_back(f);
    if (facets.empty()) facets.push_back(full.facets[rng() % full.size()]);
    return PureComplex(n, d, std::move(facets));
}

// Independent longest-induced-path oracle: plain DFS over all vertex
// sequences of J(n,d), no symmetry reduction, adjacency recomputed from the
// facet sets directly.
int johnson_induced_oracle(int n, int d) {
    auto facets = complete_complex(n, d).facets;
    int V = static_cast<int>(facets.size());
    std::vector<std::vector<bool>> adj(V, std::vector<bool>(V, false));
    for (int i = 0; i < V; ++i)
        for (int j = 0; j < V; ++j)
            if (i != j) adj[i][j] = set_difference_size(facets[i], facets[j]) == 1;
    int best = 0;
    std::vector<int> path;
    std::vector<bool> used(V, false);
    auto extendable = [&](int w) {
        if (used[w]) return false;
        if (!adj[path.back()][w]) return false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (adj[path[i]][w]) return false;
        return true;
    };
    std::function<void()> dfs = [&]() {
        best = std::max(best, static_cast<int>(path.size()) - 1);
        for (int w = 0; w < V; ++w) {
            if (!extendable(w)) continue;
            used[w] = true;
            path.push_back(w);
            dfs();
            path.pop_back();
            used[w] = false;
        }
    };
    for (int s = 0; s < V; ++s) {
        used[s] = true;
        path = {s};
        dfs();
        used[s] = false;
    }
    return best;
}

}  // namespace

std::vector<CheckResult> run_acceptance(Scale scale, std::uint64_t seed) {
    Checker checker;
    const bool full = scale == Scale::full;

    checker.run("corridor_construction", [&](std::ostringstream& os) {
        bool ok = true;
        auto c13 = corridor_2complex(13);
        ok &= expect(os, c13.size() == 35, "corridor(13) has 35 facets");
        ok &= expect(os, is_corridor(c13), "corridor(13) is a corridor");
        ok &= expect(os, dual_diameter(c13).diameter == 34, "corridor(13) diameter 34");
        int n_max = full ? 40 : 16;
        for (int n = 7; n <= n_max; ++n) {
            auto c = corridor_2complex(n);
            ok &= expect(os, is_corridor(c), "is_corridor n=" + std::to_string(n));
            ok &= expect(os, is_pseudomanifold(c), "pseudomanifold n=" + std::to_string(n));
            int diam = dual_diameter(c).diameter;
            long long lb = static_cast<long long>(
                std::ceil(2.0 * (n - 3) * (n - 3) / 9.0 - 1e-9));
            ok &= expect(os, diam >= lb,
                         "diameter >= ceil(2/9 (n-3)^2) at n=" + std::to_string(n));
            ok &= expect(os, diam <= corridor_upper_bound(n, 3),
                         "diameter <= ridge bound at n=" + std::to_string(n));
        }
        os << "corridor(13): 35 facets, diameter 34; swept n=7.." << n_max;
        return ok;
    });

    checker.run("hamiltonian_decomposition", [&](std::ostringstream& os) {
        bool ok = true;
        for (int k = 1; k <= 8; ++k) {
            auto hd = hamiltonian_decomposition(k);
            int m = 2 * k + 1;
            std::set<std::pair<int, int>> edges;
            ok &= expect(os, static_cast<int>(hd.cycles.size()) == k,
                         "k cycles at k=" + std::to_string(k));
            for (const auto& cyc : hd.cycles) {
                ok &= expect(os, static_cast<int>(cyc.size()) == m, "cycle length 2k+1");
                std::set<int> verts(cyc.begin(), cyc.end());
                ok &= expect(os, static_cast<int>(verts.size()) == m, "cycle is Hamiltonian");
                for (int i = 0; i < m; ++i) {
                    int a = cyc[i], b = cyc[(i + 1) % m];
                    ok &= expect(os, edges.emplace(std::min(a, b), std::max(a, b)).second,
                                 "edge-disjoint at k=" + std::to_string(k));
                }
            }
            ok &= expect(os, static_cast<long long>(edges.size()) == binomial(m, 2),
                         "union covers K_{2k+1} at k=" + std::to_string(k));
        }
        os << "exact edge partition for k=1..8";
        return ok;
    });

    checker.run("join_and_product_paths", [&](std::ostringstream& os) {
        bool ok = true;
        std::mt19937_64 rng(seed + 1);
        int pairs = full ? 50 : 10;
        for (int t = 0; t < pairs; ++t) {
            int n1 = 2 + static_cast<int>(rng() % 5), d1 = 1 + static_cast<int>(rng() % 2);
            int n2 = 2 + static_cast<int>(rng() % 5), d2 = 1 + static_cast<int>(rng() % 2);
            d1 = std::min(d1, n1);
            d2 = std::min(d2, n2);
            auto c1 = random_complex(n1, d1, rng);
            auto c2 = random_complex(n2, d2, rng);
            auto jn = join(c1, c2);
            ok &= expect(os, jn.size() == c1.size() * c2.size(), "join facet count");
            // Natural bijection (i,j) -> facet index in the join.
            auto g1 = dual_graph(c1);
            auto g2 = dual_graph(c2);
            auto gj = dual_graph(jn);
            auto index_of = [&](std::size_t i, std::size_t j) {
                Facet f = c1.facets[i];
                for (int v : c2.facets[j]) f.push_back(v + c1.n);
                std::sort(f.begin(), f.end());
                return static_cast<int>(
                    std::lower_bound(jn.facets.begin(), jn.facets.end(), f) - jn.facets.begin());
            };
            std::set<std::pair<int, int>> product_edges, join_edges;
            for (std::size_t i = 0; i < c1.size(); ++i)
                for (std::size_t j = 0; j < c2.size(); ++j) {
                    int a = index_of(i, j);
                    for (int i2 : g1.adj[i]) {
                        int b = index_of(i2, j);
                        product_edges.emplace(std::min(a, b), std::max(a, b));
                    }
                    for (int j2 : g2.adj[j]) {
                        int b = index_of(i, j2);
                        product_edges.emplace(std::min(a, b), std::max(a, b));
                    }
                }
            for (std::size_t a = 0; a < gj.size(); ++a)
                for (int b : gj.adj[a])
                    if (static_cast<int>(a) < b) join_edges.emplace(static_cast<int>(a), b);
            ok &= expect(os, product_edges == join_edges,
                         "dual graph of join equals product, pair " + std::to_string(t));
            if (!ok) break;
        }
        for (int l1 = 2; l1 <= 8; ++l1)
            for (int l2 = 2; l2 <= 8; ++l2) {
                auto vert = product_induced_path(l1, l2, GridStrategy::vertical);
                long long expected = (l1 / 2 + 1) * static_cast<long long>(l2) + l1;
                ok &= expect(os,
                             static_cast<long long>(vert.size()) - 1 == expected,
                             "vertical length at " + std::to_string(l1) + "x" + std::to_string(l2));
                auto zig = product_induced_path(l1, l2, GridStrategy::zigzag);
                ok &= expect(os, !zig.empty(), "zigzag nonempty");
                // Inducedness of both is asserted inside the builders; check again.
                for (std::size_t i = 0; i < zig.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < zig.size(); ++j) {
                        int dist = std::abs(zig[i].first - zig[j].first) +
                                   std::abs(zig[i].second - zig[j].second);
                        if ((dist == 1) != (j == i + 1) || dist == 0) {
                            ok &= expect(os, false, "zigzag induced");
                            break;
                        }
                    }
            }
        auto big = product_induced_path(12, 12, GridStrategy::zigzag);
        double ratio = static_cast<double>(big.size()) / (13.0 * 13.0);
        std::ostringstream rs;
        rs << "zigzag(12,12) usage " << big.size() << "/169 = " << ratio;
        ok &= expect(os, ratio >= 0.6, rs.str() + " >= 0.6");
        os << rs.str();
        return ok;
    });

    checker.run("clm_extremal_examples", [&](std::ostringstream& os) {
        bool ok = true;
        int cap = full ? 6 : 4;
        for (int n = 2; n <= cap; ++n)
            for (int d = 2; d <= cap; ++d) {
                auto complete = complete_clm(n, d);
                auto inject = injective_clm(n, d);
                ok &= expect(os, validate_clm(complete).ok,
                             "complete valid at " + std::to_string(n) + "," + std::to_string(d));
                ok &= expect(os, validate_clm(inject).ok,
                             "injective valid at " + std::to_string(n) + "," + std::to_string(d));
                ok &= expect(os, complete.length() == d * (n - 1), "complete length d(n-1)");
                ok &= expect(os, inject.length() == d * (n - 1), "injective length d(n-1)");
                auto layer_lists = inject.layers();
                for (const auto& l : layer_lists)
                    if (l.size() != 1) ok &= expect(os, false, "injective has one facet per layer");
            }
        os << "complete and injective layerings valid with length d(n-1), n,d=2.." << cap;
        return ok;
    });

    checker.run("clm_exhaustive_search", [&](std::ostringstream& os) {
        bool ok = true;
        for (int d = 1; d <= (full ? 4 : 3); ++d) {
            auto r = max_clm_search(2, d);
            ok &= expect(os, r.max_length == d, "H(2," + std::to_string(d) + ") = d");
            ok &= expect(os, validate_clm(r.witness).ok, "witness valid");
            ok &= expect(os, r.witness.length() == d, "witness length");
        }
        auto r32 = max_clm_search(3, 2);
        ok &= expect(os, r32.max_length == 4 && validate_clm(r32.witness).ok, "H(3,2) = 4");
        if (full) {
            auto r42 = max_clm_search(4, 2);
            ok &= expect(os, r42.max_length == 6 && validate_clm(r42.witness).ok, "H(4,2) = 6");
            auto r33 = max_clm_search(3, 3);
            ok &= expect(os, r33.max_length == 6 && validate_clm(r33.witness).ok, "H(3,3) = 6");
        }
        os << "search reproduces (n-1)d on the small-parameter cases";
        return ok;
    });

    checker.run("kk_bl_invariants", [&](std::ostringstream& os) {
        bool ok = true;
        std::mt19937_64 rng(seed + 2);
        std::vector<LayeredMulticomplex> instances;
        for (int n = 2; n <= 4; ++n)
            for (int d = 2; d <= 4; ++d) {
                instances.push_back(complete_clm(n, d));
                instances.push_back(injective_clm(n, d));
            }
        instances.push_back(max_clm_search(3, 2).witness);
        instances.push_back(max_clm_search(2, 3).witness);
        int randoms = full ? 200 : 50;
        for (int t = 0; t < randoms; ++t) {
            int n = 2 + static_cast<int>(rng() % 3), d = 2 + static_cast<int>(rng() % 3);
            instances.push_back(random_clm(n, d, rng));
        }
        for (const auto& m : instances) {
            if (m.base.size() == 0) continue;
            ok &= expect(os, validate_clm(m).ok, "instance valid");
            int n = m.base.n, d = m.base.d;
            ok &= expect(os, m.length() <= kalai_kleitman_clm(n, d) + 1e-9,
                         "length <= n^(log2 d + 1) - 1");
            ok &= expect(os, m.length() <= barnette_larman_clm(n, d),
                         "length <= (n-1)2^(d-1)");
            auto split = kk_split(m);
            ok &= expect(os, split.prefix + split.middle + split.suffix == m.layer_count(),
                         "split partitions the layers");
            if (split.middle >= 1) {
                ok &= expect(os, split.witness.has_value(), "middle witness exists");
                if (split.witness) {
                    for (int l = split.prefix; l < split.prefix + split.middle; ++l) {
                        auto sup = m.layer_support(l);
                        ok &= expect(os,
                                     std::find(sup.begin(), sup.end(), *split.witness) != sup.end(),
                                     "witness in every middle layer");
                    }
                }
            }
            auto pieces = bl_decompose(m);
            int total = 0, nsum = 0;
            for (const auto& p : pieces) {
                total += p.piece.length();
                nsum += p.n_used;
                for (int l = 0; l < p.piece.layer_count(); ++l) {
                    auto sup = p.piece.layer_support(l);
                    ok &= expect(os, std::find(sup.begin(), sup.end(), p.witness) != sup.end(),
                                 "piece witness in every layer");
                }
            }
            ok &= expect(os,
                         total + static_cast<int>(pieces.size()) - 1 == m.length(),
                         "length = sum of piece lengths + (k-1)");
            ok &= expect(os, nsum <= 2 * n - 1, "sum n_i <= 2n-1");
            if (!ok) break;
        }
        os << instances.size() << " layered instances checked against both bounds";
        return ok;
    });

    checker.run("substitution_to_complex", [&](std::ostringstream& os) {
        bool ok = true;
        int cap = full ? 5 : 4;
        for (int n = 2; n <= cap; ++n)
            for (int d = 2; d <= cap; ++d) {
                for (const auto& m : {complete_clm(n, d), injective_clm(n, d)}) {
                    auto sub = multicomplex_to_complex(m);
                    ok &= expect(os, sub.base.n == n * d, "n*d elements");
                    ok &= expect(os, sub.base.d == d, "rank preserved");
                    ok &= expect(os, sub.length() == m.length(), "length preserved");
                    ok &= expect(os, validate_clm(sub).ok, "image valid");
                    auto view = as_complex(sub.base);  // 0/1 exponents expected
                    ok &= expect(os, view.size() == sub.base.size(), "simplicial image");
                }
            }
        os << "substitution preserves rank, length, validity up to n,d=" << cap;
        return ok;
    });

    checker.run("nonpure_families", [&](std::ostringstream& os) {
        bool ok = true;
        auto h5 = example_hnp5();
        ok &= expect(os, h5.length() == 11, "example has 11 layers");
        ok &= expect(os, validate_nonpure(h5).ok, "example validates");
        auto f = seed_hnp1();
        ok &= expect(os, f.length() == 2, "seed has length 2");
        ok &= expect(os, validate_nonpure(f).ok, "seed validates");
        for (int step = 0; step < 5; ++step) {
            int before = f.length();
            f = extend_nonpure(f);
            ok &= expect(os, f.length() == before + 2, "extension adds 2");
            ok &= expect(os, validate_nonpure(f).ok,
                         "extension " + std::to_string(step + 1) + " validates");
        }
        os << "11-layer family valid; five extensions add 2 each";
        return ok;
    });

    checker.run("legal_sequences", [&](std::ostringstream& os) {
        bool ok = true;
        LegalMemo memo;
        LegalSequence empty0{0, {0u}};
        ok &= expect(os, legal_check(empty0, memo), "base sequence on 0 elements");
        LegalSequence single{1, {1u}};
        ok &= expect(os, legal_check(single, memo), "({1}) legal");
        LegalSequence pair{1, {1u, 0u}};
        ok &= expect(os, legal_check(pair, memo), "({1},{}) legal");
        LegalSequence twice{2, {3u, 3u}};
        ok &= expect(os, legal_check(twice, memo), "(A,A) with |A|=2 legal");
        LegalSequence nonconvex{1, {1u, 0u, 1u}};
        ok &= expect(os, !legal_check(nonconvex, memo), "non-convex triple rejected");
        auto doubled = legal_double(pair, 1);
        ok &= expect(os, doubled.length() == 4, "doubling length (i+1)m");
        ok &= expect(os, doubled.n == 4, "doubling ground set 2(n+i)");
        ok &= expect(os, legal_check(doubled, memo), "doubled sequence legal");
        auto tripled = legal_double(pair, 2);
        ok &= expect(os, tripled.length() == 6, "i=2 doubling length 3m");
        os << "axioms accept the forced positives and reject non-convexity";
        return ok;
    });

    checker.run("nonrevisiting_sweeps", [&](std::ostringstream& os) {
        bool ok = true;
        std::vector<PureComplex> fixtures = {barycentric_subdivision(boundary_simplex(3))};
        if (full) fixtures.push_back(barycentric_subdivision(boundary_simplex(4)));
        for (const auto& c : fixtures) {
            ok &= expect(os, is_flag(c), "fixture is flag");
            ok &= expect(os, is_normal(c), "fixture is normal");
            int n_used = static_cast<int>(c.used_vertices().size());
            for (std::size_t i = 0; i < c.size() && ok; ++i)
                for (std::size_t j = 0; j < c.size(); ++j) {
                    auto path = non_revisiting_path(c, c.facets[i], c.facets[j], true, false);
                    auto nr = is_non_revisiting(path);
                    if (!nr.ok || static_cast<int>(path.size()) - 1 > n_used - c.d ||
                        !is_dual_path(c, path)) {
                        ok &= expect(os, false,
                                     "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
                        break;
                    }
                }
            os << "all " << c.size() << "^2 pairs non-revisiting, length <= " << (n_used - c.d)
               << "; ";
        }
        return ok;
    });

    checker.run("decomposability", [&](std::ostringstream& os) {
        bool ok = true;
        auto nab = nabla(2, 2);
        auto weak = is_weakly_k_decomposable(nab, 0);
        ok &= expect(os, !weak.decomposable, "nabla(2,2) not weakly 0-decomposable");
        auto cases = dk_obstruction_witness(2, 2);
        ok &= expect(os, cases.size() == 3, "three wlog cases");
        for (const auto& dk : cases)
            ok &= expect(os, dk.non_pure, "case " + dk.name + " non-pure");
        std::vector<PureComplex> fixtures = {boundary_simplex(2), boundary_simplex(3),
                                             complete_complex(5, 2)};
        if (full) {
            fixtures.push_back(boundary_simplex(4));
            fixtures.push_back(complete_complex(5, 3));
        }
        for (const auto& c : fixtures) {
            auto report = provan_billera_check(c, 0);
            ok &= expect(os, report.decomposable, "fixture 0-decomposable");
            ok &= expect(os, report.strong_ok, "diam <= f_0 - d");
            ok &= expect(os, report.weakly_decomposable && report.weak_ok, "diam <= 2 f_0");
        }
        os << "exhaustive weak search: " << weak.states << " states; all obstruction cases"
           << " non-pure";
        return ok;
    });

    checker.run("bound_table", [&](std::ostringstream& os) {
        bool ok = true;
        ok &= expect(os, hirsch_excess(8, 4, 5) == Rational(1, 4), "excess(8,4,5) = 1/4");
        ok &= expect(os, hirsch_excess(40, 20, 21) == Rational(1, 20), "excess(40,20,21) = 1/20");
        ok &= expect(os, spindle_excess(25, 5, 6) == Rational(1, 20), "spindle excess 1/20");
        auto ds = strong_dstep(25, 5, 6);
        ok &= expect(os,
                     ds.dimension == 20 && ds.facets == 40 && ds.diameter_lb == 21 &&
                         ds.violates_hirsch,
                     "strong d-step at (25,5,6)");
        ok &= expect(os, strong_dstep(48, 5, 6).dimension == 43, "dimension 43 at (48,5,6)");
        ok &= expect(os, !strong_dstep(25, 5, 5).violates_hirsch, "l = d gives no violation");
        const std::map<std::pair<int, int>, long long> table = {
            {{8, 4}, 4},  {{9, 4}, 5},  {{10, 5}, 5}, {{10, 4}, 5}, {{11, 5}, 6},
            {{11, 4}, 6}, {{12, 6}, 6}, {{12, 4}, 7}, {{12, 5}, 7},
        };
        for (auto [key, value] : table)
            ok &= expect(os, known_Hb(key.first, key.second) == value,
                         "table (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                             ")");
        ok &= expect(os, known_Hb(9, 3) == 5, "Klee formula at (9,3)");
        ok &= expect(os, known_Hb(13, 9) == 4, "reduction (13,9) -> (8,4)");
        ok &= expect(os, known_Hb(12, 4) == 3LL * 12 / 4 - 2, "lower bound meets table at (12,4)");
        auto msw = msw_spindle(1);
        ok &= expect(os, msw.facets == 60 && msw.width == 5, "spindle family k=1");
        Rational prev = msw_spindle(1).excess;
        for (int k = 2; k <= 100; ++k) {
            auto cur = msw_spindle(k).excess;
            ok &= expect(os, !(prev < cur), "family excess decreasing at k=" + std::to_string(k));
            prev = cur;
        }
        ok &= expect(os, asymptotic_excess(Rational(1, 20), 2) == Rational(1, 40),
                     "(1 - 1/k) excess at k=2");
        auto sub = subdeterminant_bounds(10, 1, 10);
        ok &= expect(os,
                     sub.find("explicit_form")->value < sub.find("dyer_frieze")->value,
                     "unimodular headline below the random-walk bound at d=n=10");
        double prev_bound = 0;
        for (int M = 1; M <= (full ? 20 : 8); ++M) {
            double v = subdeterminant_bounds(8, M, 10).find("explicit_form")->value;
            ok &= expect(os, v > prev_bound, "explicit form increasing in M");
            prev_bound = v;
        }
        auto misc = misc_bounds(16, 3, 2);
        ok &= expect(os, misc.find("support_sequence_lower_pow4")->value == 4.0,
                     "support-sequence lower 4 at k=2");
        auto misc1 = misc_bounds(4, 2, 1);
        ok &= expect(os,
                     misc1.find("hkp_dimension")->value == 8 &&
                         misc1.find("hkp_vertices")->value == 18,
                     "hkp parameters at k=1");
        for (int n = 2; n <= 4; ++n) {
            auto r = max_clm_search(n, 2);
            ok &= expect(os, r.max_length == 2 * n - 2,
                         "rank-2 search matches 2n-2 at n=" + std::to_string(n));
        }
        os << "all pinned values and monotone sweeps hold";
        return ok;
    });

    checker.run("johnson_induced_paths", [&](std::ostringstream& os) {
        bool ok = true;
        int checked = 0;
        for (int n = 1; n <= 15; ++n)
            for (int d = 1; d <= n; ++d) {
                if (binomial(n, d) > 15) continue;
                if (!full && binomial(n, d) > 10) continue;
                int oracle = johnson_induced_oracle(n, d);
                auto r = longest_induced_path_johnson(n, d, SearchMode::exact);
                ok &= expect(os,
                             r.exact && static_cast<int>(r.path.size()) - 1 == oracle,
                             "J(" + std::to_string(n) + "," + std::to_string(d) + ") matches " +
                                 std::to_string(oracle));
                ok &= expect(os, is_induced_johnson_path(n, d, r.path), "path is induced");
                ++checked;
            }
        os << checked << " parameter pairs match the brute-force oracle";
        return ok;
    });

    return checker.results;
}

int print_acceptance(const std::vector<CheckResult>& results, std::ostream& os) {
    bool all = true;
    for (const auto& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.seconds << "s]";
        if (!r.detail.empty()) os << "  " << r.detail;
        os << "\n";
        all &= r.pass;
    }
    os << (all ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace dlab
