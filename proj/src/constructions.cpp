#include "diameterlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "diameterlab/complex_ops.hpp"
#include "diameterlab/diameter.hpp"

namespace dlab {

PureComplex complete_complex(int n, int d) {
    if (d < 0 || n < d) throw InputError("complete_complex: need 0 <= d <= n");
    std::vector<Facet> facets;
    if (d == 0) return PureComplex(n, 0, {});
    Facet cur(d);
    for (int i = 0; i < d; ++i) cur[i] = i;
    while (true) {
        facets.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == n - d + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
    }
    return PureComplex(n, d, std::move(facets));
}

PureMulticomplex complete_multicomplex(int n, int d) {
    if (n <= 0 || d < 0) throw InputError("complete_multicomplex: need n >= 1, d >= 0");
    std::vector<Multiset> facets;
    Multiset cur(n, 0);
    cur[0] = d;
    // Enumerate all compositions of d into n non-negative parts.
    while (true) {
        facets.push_back(cur);
        // next composition in colex-ish order
        int i = 0;
        while (i < n - 1 && cur[i] == 0) ++i;
        if (i == n - 1) break;
        int head = cur[i];
        cur[i] = 0;
        cur[i + 1] += 1;
        cur[0] = head - 1;
    }
    return PureMulticomplex(n, d, std::move(facets));
}

HamiltonianDecomposition hamiltonian_decomposition(int k) {
    if (k < 1) throw InputError("hamiltonian_decomposition: k >= 1");
    HamiltonianDecomposition hd;
    hd.k = k;
    int rim = 2 * k;
    int hub = rim;
    // Zig-zag rim path 0, 1, 2k-1, 2, 2k-2, ... ending at k; every rim
    // difference class appears the right number of times, so the k rotations
    // are edge-disjoint and cover K_{2k+1} together with the hub spokes.
    std::vector<int> zig(rim);
    zig[0] = 0;
    for (int t = 1; t < rim; ++t) zig[t] = (t % 2 == 1) ? (t + 1) / 2 : rim - t / 2;
    for (int j = 0; j < k; ++j) {
        std::vector<int> cycle;
        cycle.reserve(rim + 1);
        cycle.push_back(hub);
        for (int t = 0; t < rim; ++t) cycle.push_back((zig[t] + j) % rim);
        hd.cycles.push_back(std::move(cycle));
    }
    return hd;
}

namespace {

using Edge = std::pair<int, int>;

Edge mk_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Cycle as adjacency (each vertex has two cycle neighbors).
std::map<int, std::vector<int>> cycle_adjacency(const std::vector<int>& cycle) {
    std::map<int, std::vector<int>> adj;
    int m = static_cast<int>(cycle.size());
    for (int i = 0; i < m; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % m];
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

// Path from `from` to `to` along the cycle avoiding the removed edge.
std::vector<int> open_cycle(const std::vector<int>& cycle, const Edge& removed, int from) {
    auto adj = cycle_adjacency(cycle);
    std::vector<int> path = {from};
    int prev = -1, cur = from;
    while (path.size() < cycle.size()) {
        int next = -1;
        for (int w : adj[cur]) {
            if (w == prev) continue;
            if (mk_edge(cur, w) == removed) continue;
            next = w;
            break;
        }
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return path;
}

}  // namespace

PureComplex corridor_2complex(int n) {
    if (n < 7) throw TooSmallError("corridor_2complex: n >= 7 required");
    int k = (n - 1) / 3;
    auto hd = hamiltonian_decomposition(k);

    // Open each cycle into a walk section. First removal: lexicographically
    // smallest edge of cycle 0; afterwards the smallest edge at the previous
    // junction.
    std::vector<std::vector<int>> sections;
    Edge first_removed{-1, -1};
    for (int i = 0; i < static_cast<int>(hd.cycles[0].size()); ++i) {
        int a = hd.cycles[0][i];
        int b = hd.cycles[0][(i + 1) % hd.cycles[0].size()];
        Edge e = mk_edge(a, b);
        if (first_removed.first < 0 || e < first_removed) first_removed = e;
    }
    int junction = first_removed.second;  // walk starts at the smaller endpoint
    sections.push_back(open_cycle(hd.cycles[0], first_removed, first_removed.first));
    for (int s = 1; s < k; ++s) {
        auto adj = cycle_adjacency(hd.cycles[s]);
        const auto& nb = adj[junction];
        Edge e = std::min(mk_edge(junction, nb[0]), mk_edge(junction, nb[1]));
        int other = e.first == junction ? e.second : e.first;
        sections.push_back(open_cycle(hd.cycles[s], e, junction));
        junction = other;
    }

    std::vector<Facet> facets;
    int apex0 = 2 * k + 1;
    for (int s = 0; s < k; ++s) {
        int apex = apex0 + s;
        const auto& w = sections[s];
        for (std::size_t t = 0; t + 1 < w.size(); ++t)
            facets.push_back(Facet{w[t], w[t + 1], apex});
        if (s + 1 < k) {
            int junction_vertex = sections[s].back();
            facets.push_back(Facet{junction_vertex, apex, apex + 1});
        }
    }
    return PureComplex(n, 3, std::move(facets));
}

PureComplex join(const PureComplex& c1, const PureComplex& c2) {
    std::vector<Facet> facets;
    facets.reserve(c1.size() * c2.size());
    for (const auto& f1 : c1.facets)
        for (const auto& f2 : c2.facets) {
            Facet f = f1;
            for (int v : f2) f.push_back(v + c1.n);
            facets.push_back(std::move(f));
        }
    return PureComplex(c1.n + c2.n, c1.d + c2.d, std::move(facets));
}

std::vector<int> corridor_order(const PureComplex& c) {
    if (!is_corridor(c)) throw InputError("corridor_order: not a corridor");
    if (c.size() == 1) return {0};
    DualGraph g = dual_graph(c);
    int start = -1;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.adj[i].size() == 1 && (start < 0 || c.facets[i] < c.facets[start]))
            start = static_cast<int>(i);
    std::vector<int> order = {start};
    int prev = -1, cur = start;
    while (order.size() < c.size()) {
        int next = -1;
        for (int w : g.adj[cur])
            if (w != prev) next = w;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

PureComplex iterated_join_corridor(int n, int d, int k, GridStrategy strategy) {
    if (k < 1) throw InputError("iterated_join_corridor: k >= 1");
    PureComplex base;
    if (d == 2) {
        if (n < 3) throw TooSmallError("iterated_join_corridor: path base needs n >= 3");
        std::vector<Facet> facets;
        for (int v = 0; v + 1 < n; ++v) facets.push_back(Facet{v, v + 1});
        base = PureComplex(n, 2, std::move(facets));
    } else if (d == 3) {
        base = corridor_2complex(n);
    } else {
        throw InputError("iterated_join_corridor: base rank must be 2 or 3");
    }
    if (static_cast<long long>(base.size()) * k > static_cast<long long>(scaled_cap(2'000'000)))
        throw SizeLimitError("iterated_join_corridor: size cap");

    PureComplex acc = base;
    for (int step = 1; step < k; ++step) {
        auto order1 = corridor_order(acc);
        auto order2 = corridor_order(base);
        int l1 = static_cast<int>(order1.size()) - 1;
        int l2 = static_cast<int>(order2.size()) - 1;
        auto grid_path = product_induced_path(l1, l2, strategy);
        std::vector<Facet> facets;
        facets.reserve(grid_path.size());
        for (auto [i, j] : grid_path) {
            Facet f = acc.facets[order1[i]];
            for (int v : base.facets[order2[j]]) f.push_back(v + acc.n);
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
        }
        acc = PureComplex(acc.n + base.n, acc.d + base.d, std::move(facets));
    }
    return acc;
}

Facet nabla_facet(int a, int b, const std::vector<int>& plus, const std::vector<int>& minus) {
    Facet f;
    for (int i : plus) f.push_back(2 * (i - 1));
    for (int j : minus) f.push_back(2 * (j - 1) + 1);
    std::sort(f.begin(), f.end());
    (void)a;
    (void)b;
    return f;
}

PureComplex nabla(int a, int b) {
    if (a < 1 || b < 1) throw InputError("nabla: a,b >= 1");
    int m = a + b + 1;
    std::vector<Facet> facets;
    // All disjoint (S,T) with |S|=a, |T|=b inside [m].
    std::vector<int> smask_elems(a);
    auto s_sets = complete_complex(m, a).facets;
    for (const auto& s : s_sets) {
        std::vector<int> rest;
        for (int i = 0; i < m; ++i)
            if (!std::binary_search(s.begin(), s.end(), i)) rest.push_back(i);
        auto t_sets = complete_complex(static_cast<int>(rest.size()), b).facets;
        for (const auto& tidx : t_sets) {
            std::vector<int> splus, tminus;
            for (int i : s) splus.push_back(i + 1);
            for (int t : tidx) tminus.push_back(rest[t] + 1);
            facets.push_back(nabla_facet(a, b, splus, tminus));
        }
    }
    return PureComplex(2 * m, a + b, std::move(facets));
}

std::vector<Facet> barycentric_vertex_faces(const PureComplex& c) {
    return all_faces(c);  // sorted; index = subdivision vertex id
}

PureComplex barycentric_subdivision(const PureComplex& c) {
    auto faces = barycentric_vertex_faces(c);
    std::map<Facet, int> id;
    for (std::size_t i = 0; i < faces.size(); ++i) id[faces[i]] = static_cast<int>(i);

    std::set<Facet> chains;
    for (const auto& f : c.facets) {
        Facet perm = f;
        std::sort(perm.begin(), perm.end());
        do {
            Facet chain;
            Facet prefix;
            for (int v : perm) {
                prefix.push_back(v);
                Facet sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                chain.push_back(id.at(sorted));
            }
            std::sort(chain.begin(), chain.end());
            chains.insert(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return PureComplex(static_cast<int>(faces.size()), c.d,
                       std::vector<Facet>(chains.begin(), chains.end()));
}

PureComplex boundary_simplex(int d) {
    // facets: all d-subsets of [d+1]
    return complete_complex(d + 1, d);
}

}  // namespace dlab
