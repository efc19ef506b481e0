#include "diameterlab/induced_path.hpp"

#include <algorithm>
#include <random>

#include "diameterlab/diameter.hpp"

namespace dlab {

namespace {

std::vector<Facet> all_dsubsets(int n, int d) {
    std::vector<Facet> out;
    if (d == 0) {
        out.push_back({});
        return out;
    }
    Facet cur(d);
    for (int i = 0; i < d; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == n - d + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

struct Bitset {
    std::vector<std::uint64_t> words;
    explicit Bitset(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words[i >> 6] |= (1ull << (i & 63)); }
    bool test(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
    void or_with(const Bitset& o) {
        for (std::size_t w = 0; w < words.size(); ++w) words[w] |= o.words[w];
    }
};

struct JohnsonSearch {
    int V = 0;
    std::vector<Bitset> adj;
    std::vector<std::vector<int>> nbrs;
    long long budget = 0;
    long long nodes = 0;
    std::vector<int> path;
    std::vector<int> best;

    bool allowed(const Bitset& forbidden, const Bitset& visited, int w) const {
        return !visited.test(w) && !forbidden.test(w);
    }

    void dfs(Bitset& visited, std::vector<Bitset>& forbidden_stack) {
        ++nodes;
        if (nodes > budget) throw BudgetError("induced path search: budget exceeded");
        if (path.size() > best.size()) best = path;
        int last = path.back();
        const Bitset& forbidden = forbidden_stack.back();
        for (int w : nbrs[last]) {
            if (!allowed(forbidden, visited, w)) continue;
            // Neighbors of `last` become forbidden once `last` is interior.
            Bitset next = forbidden;
            next.or_with(adj[last]);
            visited.set(w);
            path.push_back(w);
            forbidden_stack.push_back(std::move(next));
            dfs(visited, forbidden_stack);
            forbidden_stack.pop_back();
            path.pop_back();
            visited.words[w >> 6] &= ~(1ull << (w & 63));
        }
    }
};

}  // namespace

bool is_induced_johnson_path(int n, int d, const std::vector<Facet>& path) {
    for (const auto& f : path) {
        if (static_cast<int>(f.size()) != d) return false;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] < 0 || f[i] >= n) return false;
            if (i > 0 && f[i] <= f[i - 1]) return false;
        }
    }
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j) {
            if (path[i] == path[j]) return false;
            bool adjacent = set_difference_size(path[i], path[j]) == 1;
            bool consecutive = (j == i + 1);
            if (adjacent != consecutive) return false;
        }
    return true;
}

InducedPathResult longest_induced_path_johnson(int n, int d, SearchMode mode, long long budget,
                                               std::uint64_t seed, std::size_t vertex_cap) {
    if (d < 0 || n < d) throw InputError("longest_induced_path_johnson: need 0 <= d <= n");
    long long V = binomial(n, d);
    if (mode == SearchMode::exact && V > static_cast<long long>(scaled_cap(vertex_cap)))
        throw SizeLimitError("longest_induced_path_johnson: C(n,d) exceeds exact cap");

    auto verts = all_dsubsets(n, d);
    InducedPathResult result;
    if (verts.size() <= 1) {
        if (!verts.empty()) result.path = {verts[0]};
        result.exact = true;
        return result;
    }

    JohnsonSearch js;
    js.V = static_cast<int>(verts.size());
    js.adj.assign(js.V, Bitset(js.V));
    js.nbrs.assign(js.V, {});
    for (int i = 0; i < js.V; ++i)
        for (int j = i + 1; j < js.V; ++j)
            if (set_difference_size(verts[i], verts[j]) == 1) {
                js.adj[i].set(j);
                js.adj[j].set(i);
                js.nbrs[i].push_back(j);
                js.nbrs[j].push_back(i);
            }
    js.budget = budget;

    if (mode == SearchMode::exact) {
        // Start at {0..d-1} (index 0 in lex order) and fix the second facet:
        // J(n,d) is vertex-transitive and the stabilizer of the start is
        // transitive on its neighbors, so this loses no generality.
        int start = 0;
        int second = js.nbrs[0].front();
        Bitset visited(js.V);
        visited.set(start);
        visited.set(second);
        js.path = {start, second};
        std::vector<Bitset> forbidden_stack;
        Bitset f0(js.V);
        f0.set(start);
        f0.or_with(js.adj[start]);  // chords to the start are forbidden
        forbidden_stack.push_back(std::move(f0));
        js.best = js.path;
        js.dfs(visited, forbidden_stack);
        result.exact = true;
        for (int idx : js.best) result.path.push_back(verts[idx]);
        result.nodes = js.nodes;
        return result;
    }

    // Heuristic: seeded multi-start greedy with random tie-breaking.
    std::mt19937_64 rng(seed);
    std::vector<int> bestpath;
    int restarts = 64;
    for (int r = 0; r < restarts; ++r) {
        int start = static_cast<int>(rng() % js.V);
        std::vector<int> cur = {start};
        Bitset visited(js.V);
        visited.set(start);
        Bitset forbidden(js.V);
        while (true) {
            int last = cur.back();
            std::vector<int> cands;
            for (int w : js.nbrs[last])
                if (!visited.test(w) && !forbidden.test(w)) cands.push_back(w);
            if (cands.empty()) break;
            int w = cands[rng() % cands.size()];
            forbidden.or_with(js.adj[last]);
            visited.set(w);
            cur.push_back(w);
        }
        if (cur.size() > bestpath.size()) bestpath = cur;
    }
    for (int idx : bestpath) result.path.push_back(verts[idx]);
    result.exact = false;
    return result;
}

}  // namespace dlab
