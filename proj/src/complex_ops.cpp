#include "diameterlab/complex_ops.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace dlab {

namespace {

std::vector<int> bfs_component(const DualGraph& g, int start) {
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

bool graph_connected(const DualGraph& g) {
    if (g.size() == 0) return false;
    auto dist = bfs_component(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

}  // namespace

PureComplex link(const PureComplex& c, const Facet& s) {
    Facet key = s;
    std::sort(key.begin(), key.end());
    std::vector<Facet> out;
    for (const auto& f : c.facets)
        if (is_subset(key, f)) out.push_back(set_minus(f, key));
    if (out.empty() && !key.empty()) throw NotAFaceError("link: not a face: " + facet_to_string(key));
    if (key.empty()) return c;
    return PureComplex(c.n, c.d - static_cast<int>(key.size()), std::move(out));
}

PureMulticomplex link(const PureMulticomplex& c, const Multiset& s) {
    int deg = multiset_degree(s);
    if (deg == 0) return c;
    std::vector<Multiset> out;
    for (const auto& f : c.facets) {
        if (!multiset_divides(s, f)) continue;
        Multiset rest(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) rest[i] = f[i] - s[i];
        out.push_back(std::move(rest));
    }
    if (out.empty()) throw NotAFaceError("link: not a face: " + multiset_to_string(s));
    return PureMulticomplex(c.n, c.d - deg, std::move(out));
}

PureComplex star(const PureComplex& c, const Facet& s) {
    Facet key = s;
    std::sort(key.begin(), key.end());
    if (key.empty()) return c;
    std::vector<Facet> out;
    for (const auto& f : c.facets)
        if (is_subset(key, f)) out.push_back(f);
    if (out.empty()) throw NotAFaceError("star: not a face: " + facet_to_string(key));
    return PureComplex(c.n, c.d, std::move(out));
}

PureMulticomplex star(const PureMulticomplex& c, const Multiset& s) {
    if (multiset_degree(s) == 0) return c;
    std::vector<Multiset> out;
    for (const auto& f : c.facets)
        if (multiset_divides(s, f)) out.push_back(f);
    if (out.empty()) throw NotAFaceError("star: not a face: " + multiset_to_string(s));
    return PureMulticomplex(c.n, c.d, std::move(out));
}

bool is_face(const PureComplex& c, const Facet& s) {
    Facet key = s;
    std::sort(key.begin(), key.end());
    if (key.empty()) return true;
    for (const auto& f : c.facets)
        if (is_subset(key, f)) return true;
    return false;
}

bool is_face(const PureMulticomplex& c, const Multiset& s) {
    if (multiset_degree(s) == 0) return true;
    for (const auto& f : c.facets)
        if (multiset_divides(s, f)) return true;
    return false;
}

std::vector<Facet> deletion_maximal_faces(const PureComplex& c, const Facet& s) {
    Facet key = s;
    std::sort(key.begin(), key.end());
    // Candidates: surviving facets, plus F \ {v} for each removed facet F and
    // v in S. Every face avoiding S lies under one of these.
    std::set<Facet> cand;
    for (const auto& f : c.facets) {
        if (!is_subset(key, f)) {
            cand.insert(f);
        } else {
            for (int v : key) {
                Facet g = set_minus(f, Facet{v});
                cand.insert(std::move(g));
            }
        }
    }
    std::vector<Facet> out;
    for (const auto& f : cand) {
        bool maximal = true;
        for (const auto& g : cand)
            if (&g != &f && f != g && is_subset(f, g)) {
                maximal = false;
                break;
            }
        if (maximal && !f.empty()) out.push_back(f);
    }
    return out;
}

bool is_deletion_pure(const PureComplex& c, const Facet& s) {
    auto maximal = deletion_maximal_faces(c, s);
    bool has_facet = false;
    for (const auto& f : maximal) {
        if (static_cast<int>(f.size()) != c.d) return false;
        has_facet = true;
    }
    return has_facet;
}

PureComplex deletion_complex(const PureComplex& c, const Facet& s) {
    Facet key = s;
    std::sort(key.begin(), key.end());
    std::vector<Facet> out;
    for (const auto& f : c.facets)
        if (!is_subset(key, f)) out.push_back(f);
    return PureComplex(c.n, c.d, std::move(out));
}

DualGraph dual_graph(const PureComplex& c) {
    DualGraph g;
    g.adj.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (set_difference_size(c.facets[i], c.facets[j]) == 1) {
                g.adj[i].push_back(static_cast<int>(j));
                g.adj[j].push_back(static_cast<int>(i));
            }
    return g;
}

DualGraph dual_graph(const PureMulticomplex& c) {
    DualGraph g;
    g.adj.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            int shared = multiset_degree(multiset_intersection(c.facets[i], c.facets[j]));
            if (shared == c.d - 1) {
                g.adj[i].push_back(static_cast<int>(j));
                g.adj[j].push_back(static_cast<int>(i));
            }
        }
    return g;
}

bool is_strongly_connected(const PureComplex& c) {
    return graph_connected(dual_graph(c));
}

bool is_strongly_connected(const PureMulticomplex& c) {
    return graph_connected(dual_graph(c));
}

std::vector<Facet> all_faces(const PureComplex& c) {
    std::set<Facet> faces;
    for (const auto& f : c.facets) {
        int d = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << d); ++mask) {
            Facet sub;
            for (int i = 0; i < d; ++i)
                if (mask & (1u << i)) sub.push_back(f[i]);
            faces.insert(std::move(sub));
        }
    }
    return {faces.begin(), faces.end()};
}

std::vector<Multiset> all_faces(const PureMulticomplex& c) {
    std::set<Multiset> faces;
    Multiset cur;
    for (const auto& f : c.facets) {
        // Enumerate all nonzero divisors of the exponent vector.
        cur.assign(f.size(), 0);
        while (true) {
            std::size_t i = 0;
            while (i < f.size() && cur[i] == f[i]) {
                cur[i] = 0;
                ++i;
            }
            if (i == f.size()) break;
            cur[i] += 1;
            faces.insert(cur);
        }
    }
    return {faces.begin(), faces.end()};
}

bool is_normal(const PureComplex& c) {
    if (!is_strongly_connected(c)) return false;
    for (const auto& s : all_faces(c)) {
        if (static_cast<int>(s.size()) == c.d) continue;  // link is a point
        if (!is_strongly_connected(link(c, s))) return false;
    }
    return true;
}

bool is_normal(const PureMulticomplex& c) {
    if (!is_strongly_connected(c)) return false;
    for (const auto& s : all_faces(c)) {
        if (multiset_degree(s) == c.d) continue;
        if (!is_strongly_connected(link(c, s))) return false;
    }
    return true;
}

std::vector<std::vector<int>> skeleton_graph(const PureComplex& c) {
    std::vector<std::set<int>> adj(c.n);
    for (const auto& f : c.facets)
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                adj[f[i]].insert(f[j]);
                adj[f[j]].insert(f[i]);
            }
    std::vector<std::vector<int>> out(c.n);
    for (int v = 0; v < c.n; ++v) out[v] = {adj[v].begin(), adj[v].end()};
    return out;
}

namespace {

// Recursive clique extension over the 1-skeleton. Returns false as soon as a
// clique that is not a face shows up (any clique of size > d qualifies).
bool cliques_are_faces(const PureComplex& c, const std::vector<std::vector<int>>& adj,
                       Facet& clique, const std::vector<int>& candidates) {
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        int v = candidates[idx];
        clique.push_back(v);
        if (clique.size() >= 3) {
            if (static_cast<int>(clique.size()) > c.d) {
                clique.pop_back();
                return false;
            }
            Facet sorted = clique;
            std::sort(sorted.begin(), sorted.end());
            if (!is_face(c, sorted)) {
                clique.pop_back();
                return false;
            }
        }
        std::vector<int> next;
        for (std::size_t jdx = idx + 1; jdx < candidates.size(); ++jdx) {
            int w = candidates[jdx];
            if (std::binary_search(adj[v].begin(), adj[v].end(), w)) next.push_back(w);
        }
        if (!cliques_are_faces(c, adj, clique, next)) {
            clique.pop_back();
            return false;
        }
        clique.pop_back();
    }
    return true;
}

}  // namespace

bool is_flag(const PureComplex& c) {
    auto adj = skeleton_graph(c);
    std::vector<int> verts = c.used_vertices();
    Facet clique;
    return cliques_are_faces(c, adj, clique, verts);
}

bool is_pseudomanifold(const PureComplex& c) {
    std::set<Facet> seen_once, seen_twice;
    for (const auto& f : c.facets)
        for (int v : f) {
            Facet ridge = set_minus(f, Facet{v});
            if (seen_twice.count(ridge)) return false;
            if (!seen_once.insert(ridge).second) seen_twice.insert(ridge);
        }
    return true;
}

bool is_corridor(const PureComplex& c) {
    if (c.size() == 0) return false;
    if (c.size() == 1) return true;
    DualGraph g = dual_graph(c);
    int deg1 = 0;
    for (const auto& row : g.adj) {
        if (row.size() == 1)
            ++deg1;
        else if (row.size() != 2)
            return false;
    }
    return deg1 == 2 && graph_connected(g);
}

std::vector<int> vertex_distances_from(const PureComplex& c, const Facet& s) {
    auto adj = skeleton_graph(c);
    std::vector<int> dist(c.n, -1);
    std::queue<int> q;
    for (int v : s) {
        if (v < 0 || v >= c.n) throw InputError("vertex_distance: vertex out of range");
        if (dist[v] < 0) {
            dist[v] = 0;
            q.push(v);
        }
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

int vertex_distance(const PureComplex& c, const Facet& s, const Facet& t) {
    if (s.empty() || t.empty()) throw InputError("vertex_distance: empty set");
    auto dist = vertex_distances_from(c, s);
    int best = -1;
    for (int v : t) {
        if (v < 0 || v >= c.n) throw InputError("vertex_distance: vertex out of range");
        if (dist[v] >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
    }
    return best;
}

long long f_count(const PureComplex& c, int k) {
    if (k < 0 || k >= c.d) {
        if (k == -1) return 1;  // the empty face
        return 0;
    }
    std::set<Facet> faces;
    int take = k + 1;
    for (const auto& f : c.facets) {
        std::vector<int> idx(take);
        for (int i = 0; i < take; ++i) idx[i] = i;
        while (true) {
            Facet sub(take);
            for (int i = 0; i < take; ++i) sub[i] = f[idx[i]];
            faces.insert(std::move(sub));
            int i = take - 1;
            while (i >= 0 && idx[i] == c.d - take + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return static_cast<long long>(faces.size());
}

}  // namespace dlab
