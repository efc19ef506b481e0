#include "diameterlab/diameter.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "diameterlab/complex_ops.hpp"

namespace dlab {

std::vector<int> dual_distances_from(const DualGraph& g, int start) {
    std::vector<int> dist(g.size(), -1);
    std::queue<int> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

namespace {

template <typename Complex, typename FacetT>
int find_facet(const Complex& c, const FacetT& f) {
    auto it = std::lower_bound(c.facets.begin(), c.facets.end(), f);
    if (it == c.facets.end() || *it != f) return -1;
    return static_cast<int>(it - c.facets.begin());
}

template <typename Complex, typename FacetT>
int dual_distance_impl(const Complex& c, const FacetT& x, const FacetT& y) {
    int ix = find_facet(c, x);
    int iy = find_facet(c, y);
    if (ix < 0 || iy < 0) throw InputError("dual_distance: not a facet of the complex");
    if (ix == iy) return 0;
    auto dist = dual_distances_from(dual_graph(c), ix);
    return dist[iy];
}

template <typename Complex>
DiameterReport dual_diameter_impl(const Complex& c) {
    if (c.size() == 0) throw DisconnectedError("dual_diameter: empty complex");
    DualGraph g = dual_graph(c);
    DiameterReport report;
    report.diameter = -1;
    for (std::size_t s = 0; s < g.size(); ++s) {
        auto dist = dual_distances_from(g, static_cast<int>(s));
        for (std::size_t t = 0; t < g.size(); ++t) {
            if (dist[t] < 0) throw DisconnectedError("dual_diameter: dual graph disconnected");
            if (dist[t] > report.diameter) {
                report.diameter = dist[t];
                report.witness_from = static_cast<int>(s);
                report.witness_to = static_cast<int>(t);
            }
        }
    }
    // Shortest witness path via parent-tracking BFS from the witness source.
    std::vector<int> parent(g.size(), -1);
    std::vector<int> dist(g.size(), -1);
    std::queue<int> q;
    dist[report.witness_from] = 0;
    q.push(report.witness_from);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                q.push(w);
            }
    }
    std::vector<int> nodes;
    for (int v = report.witness_to; v >= 0; v = parent[v]) nodes.push_back(v);
    std::reverse(nodes.begin(), nodes.end());
    report.witness_path.nodes = std::move(nodes);
    return report;
}

// Non-revisiting <=> for every vertex (resp. multiset level), the set of path
// positions containing it is an interval.
template <typename FacetT, typename KeyOf>
NonRevisitingResult non_revisiting_impl(const std::vector<FacetT>& path, KeyOf key_count) {
    std::map<std::pair<int, int>, std::pair<int, int>> span;  // key -> (first, last)
    for (std::size_t idx = 0; idx < path.size(); ++idx)
        for (auto [key, count] : key_count(path[idx]))
            for (int level = 1; level <= count; ++level) {
                auto [it, fresh] =
                    span.try_emplace({key, level}, static_cast<int>(idx), static_cast<int>(idx));
                if (!fresh) it->second.second = static_cast<int>(idx);
            }
    NonRevisitingResult best;
    for (std::size_t j = 0; j < path.size(); ++j) {
        for (auto& [key, fl] : span) {
            auto [first, last] = fl;
            if (first < static_cast<int>(j) && static_cast<int>(j) < last) {
                // vertex present at first and last; is it missing at j?
                bool present = false;
                for (auto [k2, cnt] : key_count(path[j]))
                    if (k2 == key.first && cnt >= key.second) present = true;
                if (!present) {
                    NonRevisitingResult r;
                    r.ok = false;
                    r.i = first;
                    r.j = static_cast<int>(j);
                    r.k = last;
                    if (best.ok || std::tie(r.i, r.j, r.k) < std::tie(best.i, best.j, best.k))
                        best = r;
                }
            }
        }
    }
    return best;
}

}  // namespace

int dual_distance(const PureComplex& c, const Facet& x, const Facet& y) {
    Facet xs = x, ys = y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    return dual_distance_impl(c, xs, ys);
}

int dual_distance(const PureMulticomplex& c, const Multiset& x, const Multiset& y) {
    return dual_distance_impl(c, x, y);
}

DiameterReport dual_diameter(const PureComplex& c) { return dual_diameter_impl(c); }
DiameterReport dual_diameter(const PureMulticomplex& c) { return dual_diameter_impl(c); }

NonRevisitingResult is_non_revisiting(const std::vector<Facet>& path) {
    return non_revisiting_impl(path, [](const Facet& f) {
        std::vector<std::pair<int, int>> out;
        for (int v : f) out.emplace_back(v, 1);
        return out;
    });
}

NonRevisitingResult is_non_revisiting(const std::vector<Multiset>& path) {
    return non_revisiting_impl(path, [](const Multiset& m) {
        std::vector<std::pair<int, int>> out;
        for (std::size_t v = 0; v < m.size(); ++v)
            if (m[v] > 0) out.emplace_back(static_cast<int>(v), m[v]);
        return out;
    });
}

bool is_dual_path(const PureComplex& c, const std::vector<Facet>& path) {
    for (const auto& f : path)
        if (!std::binary_search(c.facets.begin(), c.facets.end(), f)) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (set_difference_size(path[i], path[i + 1]) != 1) return false;
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j)
            if (path[i] == path[j]) return false;
    return true;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

long long corridor_upper_bound(int n, int d) {
    if (d < 2) throw InputError("corridor_upper_bound: requires d >= 2");
    return (binomial(n, d - 1) - d) / (d - 1);
}

Rational hirsch_excess(int n, int d, int delta) {
    if (n <= d) throw InputError("hirsch_excess: requires n > d");
    return Rational(delta, n - d) - Rational(1);
}

}  // namespace dlab
