#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>
#include <random>

#include "diameterlab/complex_ops.hpp"
#include "diameterlab/constructions.hpp"
#include "diameterlab/diameter.hpp"
#include "diameterlab/induced_path.hpp"

using namespace dlab;

namespace {

// Diameter oracle: all-pairs BFS written against the raw facet list.
int diameter_oracle(const PureComplex& c) {
    auto adjacent = [&](std::size_t i, std::size_t j) {
        return set_difference_size(c.facets[i], c.facets[j]) == 1;
    };
    int best = 0;
    for (std::size_t s = 0; s < c.size(); ++s) {
        std::vector<int> dist(c.size(), -1);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (std::size_t w = 0; w < c.size(); ++w)
                if (dist[w] < 0 && adjacent(u, w)) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
        }
        for (int d : dist) {
            if (d < 0) return -1;
            best = std::max(best, d);
        }
    }
    return best;
}

PureComplex random_connected_complex(int n, int d, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        auto full = complete_complex(n, d);
        std::vector<Facet> facets;
        for (const auto& f : full.facets)
            if (rng() % 2 == 0) facets.push_back(f);
        if (facets.empty()) continue;
        PureComplex c(n, d, std::move(facets));
        if (is_strongly_connected(c)) return c;
    }
    return complete_complex(n, d);
}

}  // namespace

TEST_CASE("dual distance") {
    auto c = complete_complex(4, 2);
    CHECK(dual_distance(c, Facet{0, 1}, Facet{0, 1}) == 0);
    CHECK(dual_distance(c, Facet{0, 1}, Facet{0, 2}) == 1);
    CHECK(dual_distance(c, Facet{0, 1}, Facet{2, 3}) == 2);  // antipodal in J(4,2)
}

TEST_CASE("dual diameter with witnesses") {
    for (int n = 3; n <= 7; ++n)
        for (int d = 1; d < n; ++d) {
            auto c = complete_complex(n, d);
            auto report = dual_diameter(c);
            CHECK(report.diameter == std::min(d, n - d));
            CHECK(report.witness_path.length() == report.diameter);
            CHECK(report.witness_path.nodes.front() == report.witness_from);
            CHECK(report.witness_path.nodes.back() == report.witness_to);
        }
    auto corridor = corridor_2complex(10);
    CHECK(dual_diameter(corridor).diameter == static_cast<int>(corridor.size()) - 1);

    PureComplex disconnected(4, 2, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(dual_diameter(disconnected), DisconnectedError);

    // Frozen regression value, first computed with the BFS oracle above.
    auto nab = nabla(2, 2);
    int oracle = diameter_oracle(nab);
    CHECK(dual_diameter(nab).diameter == oracle);
    CHECK(oracle == 3);
}

TEST_CASE("non-revisiting predicate") {
    std::vector<Facet> tiny = {{0, 1}};
    CHECK(is_non_revisiting(tiny).ok);
    std::vector<Facet> pair = {{0, 1}, {1, 2}};
    CHECK(is_non_revisiting(pair).ok);
    // Vertex 0 leaves and comes back.
    std::vector<Facet> revisit = {{0, 1}, {1, 2}, {2, 0}};
    auto r = is_non_revisiting(revisit);
    CHECK_FALSE(r.ok);
    CHECK(r.i == 0);
    CHECK(r.j == 1);
    CHECK(r.k == 2);

    std::vector<Multiset> mpath = {{2, 0}, {1, 1}, {2, 0}};
    CHECK_FALSE(is_non_revisiting(mpath).ok);
    std::vector<Multiset> mgood = {{2, 0}, {1, 1}, {0, 2}};
    CHECK(is_non_revisiting(mgood).ok);
}

TEST_CASE("non-revisiting paths cannot exceed n_used - d") {
    // Property of the definition, checked on shortest paths in small complexes.
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        auto c = random_connected_complex(5, 2, rng);
        auto report = dual_diameter(c);
        std::vector<Facet> path;
        for (int idx : report.witness_path.nodes) path.push_back(c.facets[idx]);
        if (is_non_revisiting(path).ok) {
            std::set<int> used;
            for (const auto& f : path) used.insert(f.begin(), f.end());
            CHECK(static_cast<int>(path.size()) - 1 <=
                  static_cast<int>(used.size()) - c.d);
        }
    }
}

TEST_CASE("shortest dual paths form corridors") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        auto c = random_connected_complex(5, 2, rng);
        auto report = dual_diameter(c);
        std::vector<Facet> facets;
        for (int idx : report.witness_path.nodes) facets.push_back(c.facets[idx]);
        PureComplex sub(c.n, c.d, facets);
        CHECK(is_corridor(sub));
        CHECK(dual_diameter(sub).diameter == report.diameter);
    }
}

TEST_CASE("corridor upper bound") {
    CHECK(corridor_upper_bound(3, 2) == 1);
    CHECK(corridor_upper_bound(13, 3) == 37);
    CHECK_THROWS_AS(corridor_upper_bound(5, 1), InputError);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 25; ++t) {
        int n = 4 + static_cast<int>(rng() % 3);
        auto c = random_connected_complex(n, 2 + static_cast<int>(rng() % 2) % (n - 1), rng);
        CHECK(dual_diameter(c).diameter <= corridor_upper_bound(c.n, c.d));
    }
}

TEST_CASE("hirsch excess") {
    CHECK(hirsch_excess(8, 4, 5) == Rational(1, 4));
    CHECK(hirsch_excess(10, 4, 6) == Rational(0));
    CHECK(hirsch_excess(40, 20, 21) == Rational(1, 20));
    CHECK_THROWS_AS(hirsch_excess(4, 4, 1), InputError);
}

TEST_CASE("longest induced path in Johnson graphs") {
    SUBCASE("rank one is a single edge") {
        auto r = longest_induced_path_johnson(5, 1, SearchMode::exact);
        CHECK(r.exact);
        CHECK(r.path.size() == 2);
    }
    SUBCASE("exact values match an independent DFS oracle") {
        // Oracle: DFS over all vertex sequences, all starts, no reductions.
        auto oracle = [](int n, int d) {
            auto facets = complete_complex(n, d).facets;
            int V = static_cast<int>(facets.size());
            std::vector<std::vector<bool>> adj(V, std::vector<bool>(V, false));
            for (int i = 0; i < V; ++i)
                for (int j = 0; j < V; ++j)
                    if (i != j) adj[i][j] = set_difference_size(facets[i], facets[j]) == 1;
            int best = 0;
            std::vector<int> path;
            std::vector<bool> used(V, false);
            std::function<void()> dfs = [&]() {
                best = std::max(best, static_cast<int>(path.size()) - 1);
                for (int w = 0; w < V; ++w) {
                    if (used[w] || !adj[path.back()][w]) continue;
                    bool chord = false;
                    for (std::size_t i = 0; i + 1 < path.size(); ++i)
                        if (adj[path[i]][w]) chord = true;
                    if (chord) continue;
                    used[w] = true;
                    path.push_back(w);
                    dfs();
                    path.pop_back();
                    used[w] = false;
                }
            };
            for (int s = 0; s < V; ++s) {
                used.assign(V, false);
                used[s] = true;
                path = {s};
                dfs();
            }
            return best;
        };
        auto r52 = longest_induced_path_johnson(5, 2, SearchMode::exact);
        CHECK(static_cast<int>(r52.path.size()) - 1 == oracle(5, 2));
        CHECK(is_induced_johnson_path(5, 2, r52.path));
        auto r42 = longest_induced_path_johnson(4, 2, SearchMode::exact);
        CHECK(static_cast<int>(r42.path.size()) - 1 == oracle(4, 2));
    }
    SUBCASE("complement symmetry") {
        for (int n = 4; n <= 6; ++n)
            for (int d = 1; d < n; ++d) {
                if (binomial(n, d) > 20) continue;
                auto a = longest_induced_path_johnson(n, d, SearchMode::exact);
                auto b = longest_induced_path_johnson(n, n - d, SearchMode::exact);
                CHECK(a.path.size() == b.path.size());
            }
    }
    SUBCASE("heuristic returns an induced path with the exact flag off") {
        auto r = longest_induced_path_johnson(7, 3, SearchMode::heuristic, 1'000'000, 42);
        CHECK_FALSE(r.exact);
        CHECK(is_induced_johnson_path(7, 3, r.path));
    }
    SUBCASE("exact cap") {
        CHECK_THROWS_AS(longest_induced_path_johnson(30, 15, SearchMode::exact),
                        SizeLimitError);
    }
}
