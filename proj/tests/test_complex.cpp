#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "diameterlab/canonical.hpp"
#include "diameterlab/complex_ops.hpp"
#include "diameterlab/constructions.hpp"

using namespace dlab;

namespace {

// Independent BFS oracle over an explicit edge list.
int bfs_oracle(const std::vector<std::vector<int>>& adj, int from, int to) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<int> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist[to];
}

PureComplex random_complex(int n, int d, std::mt19937_64& rng) {
    auto full = complete_complex(n, d);
    std::vector<Facet> facets;
    for (const auto& f : full.facets)
        if (rng() % 2 == 0) facets.push_back(f);
    if (facets.empty()) facets.push_back(full.facets[rng() % full.size()]);
    return PureComplex(n, d, std::move(facets));
}

// Brute-force canonical form over all permutations of [n].
PureComplex canonical_oracle(const PureComplex& c) {
    std::vector<int> perm(c.n);
    std::iota(perm.begin(), perm.end(), 0);
    PureComplex best = c;
    bool have = false;
    do {
        auto img = relabel(c, perm);
        if (!have || img.facets < best.facets) {
            best = img;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("link basics") {
    auto c = complete_complex(3, 2);
    auto lk = link(c, Facet{0});
    CHECK(lk.d == 1);
    CHECK(lk.facets == std::vector<Facet>{{1}, {2}});
    CHECK(link(c, Facet{}) == c);
    CHECK_THROWS_AS(link(c, Facet{0, 1, 2}), InputError);  // wrong size is not even a face shape
    auto two_triangles = PureComplex(5, 3, {{0, 1, 2}, {0, 3, 4}});
    CHECK_THROWS_AS(link(two_triangles, Facet{1, 3}), NotAFaceError);
}

TEST_CASE("link of a nabla vertex") {
    auto nab = nabla(2, 2);
    CHECK(nab.n == 10);
    CHECK(nab.size() == 30);
    // Any vertex lies in C(4,1)*C(3,2) = 12 facets.
    auto lk = link(nab, Facet{0});
    CHECK(lk.size() == 12);
    CHECK(lk.d == 3);
}

TEST_CASE("star equals face joined with link") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        int n = 3 + static_cast<int>(rng() % 4);
        int d = 2 + static_cast<int>(rng() % 2);
        if (d > n) continue;
        auto c = random_complex(n, d, rng);
        auto faces = all_faces(c);
        const auto& s = faces[rng() % faces.size()];
        auto st = star(c, s);
        auto lk = link(c, s);
        std::vector<Facet> rebuilt;
        for (const auto& f : lk.facets) rebuilt.push_back(set_union(f, s));
        std::sort(rebuilt.begin(), rebuilt.end());
        CHECK(st.facets == rebuilt);
        CHECK(st.facets.size() == lk.facets.size());
    }
}

TEST_CASE("star examples") {
    auto c = complete_complex(3, 2);
    CHECK(star(c, Facet{}) == c);
    CHECK(star(c, Facet{0}).facets == std::vector<Facet>{{0, 1}, {0, 2}});
}

TEST_CASE("deletion maximal faces") {
    auto c = complete_complex(3, 2);  // boundary of a triangle
    SUBCASE("nothing removed when S is not a face") {
        auto out = deletion_maximal_faces(c, Facet{0, 1, 2});
        CHECK(out == c.facets);
    }
    SUBCASE("single surviving facet covers the rest") {
        auto out = deletion_maximal_faces(c, Facet{0});
        CHECK(out == std::vector<Facet>{{1, 2}});
        CHECK(is_deletion_pure(c, Facet{0}));
    }
    SUBCASE("mixed cardinality witnesses non-pureness") {
        auto nab = nabla(2, 2);
        // Delete +1 = vertex 0 and +2 = vertex 2.
        PureComplex cur = deletion_complex(deletion_complex(nab, Facet{0}), Facet{2});
        bool has_full = cur.size() > 0;
        auto maximal = deletion_maximal_faces(deletion_complex(nab, Facet{0}), Facet{2});
        bool has_short = false;
        for (const auto& f : maximal)
            if (static_cast<int>(f.size()) < nab.d) has_short = true;
        CHECK(has_full);
        CHECK(has_short);
        CHECK_FALSE(is_deletion_pure(deletion_complex(nab, Facet{0}), Facet{2}));
    }
}

TEST_CASE("dual graph shapes") {
    auto c = complete_complex(3, 2);
    auto g = dual_graph(c);
    for (const auto& row : g.adj) CHECK(row.size() == 2);  // triangle K3

    // Johnson graph degree d(n-d), vertex count C(n,d).
    for (int n = 3; n <= 7; ++n)
        for (int d = 1; d < n; ++d) {
            auto jc = complete_complex(n, d);
            auto jg = dual_graph(jc);
            for (const auto& row : jg.adj)
                CHECK(static_cast<int>(row.size()) == d * (n - d));
        }

    // A 1-complex is a graph; its dual graph is the line graph.
    PureComplex path_graph(4, 2, {{0, 1}, {1, 2}, {2, 3}});
    auto lg = dual_graph(path_graph);
    CHECK(lg.adj[0].size() == 1);
    CHECK(lg.adj[1].size() == 2);
    CHECK(lg.adj[2].size() == 1);
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(complete_complex(4, 2)));
    PureComplex disjoint(4, 2, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_strongly_connected(disjoint));
    CHECK(is_strongly_connected(nabla(2, 2)));
    PureComplex single(3, 2, {{0, 1}});
    CHECK(is_strongly_connected(single));
    PureComplex empty(3, 2, {});
    CHECK_FALSE(is_strongly_connected(empty));
}

TEST_CASE("normality") {
    CHECK(is_normal(boundary_simplex(2)));
    CHECK(is_normal(boundary_simplex(3)));
    PureComplex pinched(5, 3, {{0, 1, 2}, {0, 3, 4}});  // two triangles glued at a vertex
    CHECK_FALSE(is_normal(pinched));
    CHECK(is_normal(barycentric_subdivision(boundary_simplex(3))));
}

TEST_CASE("flagness") {
    PureComplex hollow(3, 2, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_FALSE(is_flag(hollow));  // the triangle clique is not a face
    PureComplex single(4, 3, {{0, 1, 2}});
    CHECK(is_flag(single));
    CHECK(is_flag(barycentric_subdivision(boundary_simplex(2))));
    CHECK(is_flag(barycentric_subdivision(boundary_simplex(3))));
    CHECK(is_flag(barycentric_subdivision(hollow)));
}

TEST_CASE("pseudomanifold and corridor") {
    CHECK_FALSE(is_pseudomanifold(complete_complex(4, 2)));
    CHECK(is_pseudomanifold(corridor_2complex(10)));
    PureComplex single(3, 2, {{0, 1}});
    CHECK(is_pseudomanifold(single));
    CHECK(is_corridor(single));
    CHECK(is_corridor(corridor_2complex(13)));
    CHECK_FALSE(is_corridor(complete_complex(4, 2)));
}

TEST_CASE("vertex distance matches a BFS oracle") {
    auto c = barycentric_subdivision(boundary_simplex(3));
    auto adj = skeleton_graph(c);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        int u = static_cast<int>(rng() % c.n);
        int v = static_cast<int>(rng() % c.n);
        CHECK(vertex_distance(c, Facet{u}, Facet{v}) == bfs_oracle(adj, u, v));
    }
    CHECK(vertex_distance(c, Facet{0, 1}, Facet{1, 2}) == 0);  // shared vertex
    PureComplex path_graph(4, 2, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(vertex_distance(path_graph, Facet{0}, Facet{3}) == 3);
}

TEST_CASE("face counting") {
    CHECK(f_count(complete_complex(5, 3), 0) == 5);
    CHECK(f_count(complete_complex(5, 3), 2) == 10);
    CHECK(f_count(boundary_simplex(3), 1) == 6);
    CHECK(f_count(corridor_2complex(13), 2) == 35);
}

TEST_CASE("multiset operations") {
    Multiset a = {2, 1, 0};  // 1^2 2
    Multiset b = {1, 2, 0};  // 1 2^2
    CHECK(multiset_intersection(a, b) == Multiset{1, 1, 0});
    CHECK(multiset_union(a, b) == Multiset{2, 2, 0});
    CHECK(multiset_union(a, a) == a);
    CHECK(multiset_intersection(a, a) == a);
    Multiset c = {2, 0, 0}, d = {0, 0, 2};
    CHECK(multiset_union(c, d) == Multiset{2, 0, 2});
    CHECK(multiset_intersection(c, d) == Multiset{0, 0, 0});
}

TEST_CASE("canonical form") {
    std::mt19937_64 rng(3);
    SUBCASE("idempotent and invariant under relabeling") {
        for (int t = 0; t < 25; ++t) {
            int n = 3 + static_cast<int>(rng() % 3);
            auto c = random_complex(n, 2, rng);
            auto canon = canonical_form(c);
            CHECK(canonical_form(canon.complex).complex == canon.complex);
            std::vector<int> perm(c.n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            auto shuffled = relabel(c, perm);
            CHECK(canonical_form(shuffled).complex == canon.complex);
        }
    }
    SUBCASE("matches the brute-force oracle") {
        for (int t = 0; t < 15; ++t) {
            int n = 3 + static_cast<int>(rng() % 3);
            auto c = random_complex(n, 2, rng);
            CHECK(canonical_form(c).complex == canonical_oracle(c));
        }
    }
    SUBCASE("complete complex is fixed under the identity") {
        for (int n = 3; n <= 6; ++n) {
            auto c = complete_complex(n, 2);
            auto canon = canonical_form(c);
            CHECK(canon.complex == c);
            std::vector<int> identity(c.n);
            std::iota(identity.begin(), identity.end(), 0);
            CHECK(canon.relabeling == identity);
        }
    }
    SUBCASE("cap is enforced") {
        auto big = complete_complex(20, 2);
        CHECK_THROWS_AS(canonical_form(big, 10), SizeLimitError);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(PureComplex(3, 2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(PureComplex(3, 2, {{0, 3}}), InputError);
    CHECK_THROWS_AS(PureComplex(3, 2, {{0, 1}, {1, 0}}), InputError);  // duplicate after sort
    CHECK_THROWS_AS(PureMulticomplex(2, 2, {{1, 0}}), InputError);     // degree mismatch
    CHECK_THROWS_AS(PureMulticomplex(2, 2, {{-1, 3}}), InputError);
    CHECK(PureComplex(3, 2, {{1, 0}, {0, 2}}).facets == std::vector<Facet>{{0, 1}, {0, 2}});
}
