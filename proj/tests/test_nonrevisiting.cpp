#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "diameterlab/complex_ops.hpp"
#include "diameterlab/constructions.hpp"
#include "diameterlab/diameter.hpp"
#include "diameterlab/nonrevisiting.hpp"

using namespace dlab;

TEST_CASE("segments at distance zero and rank one") {
    auto c = barycentric_subdivision(boundary_simplex(2));  // hexagon, rank 2
    auto f0 = c.facets[0];
    auto cert = combinatorial_segment(c, f0, f0, f0[0]);
    CHECK(cert.path.size() == 1);
    CHECK(segment_monotone_check(c, cert));

    PureComplex rank1(4, 1, {{0}, {1}, {2}, {3}});
    auto cert1 = combinatorial_segment(rank1, Facet{0}, Facet{2, 3}, 0);
    CHECK(cert1.path.size() == 2);
    CHECK(cert1.path[1] == Facet{2});
    CHECK(segment_monotone_check(rank1, cert1));
}

TEST_CASE("segments on the subdivided sphere") {
    auto c = barycentric_subdivision(boundary_simplex(3));
    REQUIRE(is_flag(c));
    REQUIRE(is_normal(c));
    int pairs = 0;
    for (std::size_t i = 0; i < c.size(); i += 5)
        for (std::size_t j = 0; j < c.size(); j += 7) {
            const auto& from = c.facets[i];
            const auto& target = c.facets[j];
            if (!set_intersect(from, target).empty()) continue;
            int anchor = -1, best = -1;
            for (int v : from) {
                int dv = vertex_distance(c, Facet{v}, target);
                if (best < 0 || dv < best) {
                    best = dv;
                    anchor = v;
                }
            }
            auto cert = combinatorial_segment(c, from, target, anchor, false);
            CHECK(segment_monotone_check(c, cert));
            // weakly decreasing distance along the path
            int prev = -1;
            for (const auto& f : cert.path) {
                int dcur = vertex_distance(c, f, target);
                if (prev >= 0) CHECK(dcur <= prev);
                prev = dcur;
            }
            ++pairs;
        }
    CHECK(pairs > 0);
}

TEST_CASE("corrupted certificate fails the replay") {
    auto c = barycentric_subdivision(boundary_simplex(3));
    Facet from = c.facets[0];
    Facet target = c.facets[20];
    if (!set_intersect(from, target).empty()) target = c.facets[23];
    int anchor = -1, best = -1;
    for (int v : from) {
        int dv = vertex_distance(c, Facet{v}, target);
        if (best < 0 || dv < best) {
            best = dv;
            anchor = v;
        }
    }
    auto cert = combinatorial_segment(c, from, target, anchor, false);
    if (cert.path.size() >= 3) {
        std::swap(cert.path[1], cert.path[2]);
        CHECK_FALSE(segment_monotone_check(c, cert));
    }
}

TEST_CASE("bad anchors are rejected") {
    auto c = barycentric_subdivision(boundary_simplex(3));
    Facet from = c.facets[0];
    Facet target = c.facets[20];
    if (!set_intersect(from, target).empty()) target = c.facets[23];
    // pick a vertex of `from` that does NOT realize the distance
    int bad = -1;
    int fdist = vertex_distance(c, from, target);
    for (int v : from)
        if (vertex_distance(c, Facet{v}, target) != fdist) bad = v;
    if (bad >= 0) CHECK_THROWS_AS(combinatorial_segment(c, from, target, bad, false),
                                  BadAnchorError);
}

TEST_CASE("non-revisiting paths on flag normal fixtures") {
    auto check_all_pairs = [](const PureComplex& c) {
        int n_used = static_cast<int>(c.used_vertices().size());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) {
                auto path = non_revisiting_path(c, c.facets[i], c.facets[j], true, false);
                REQUIRE(is_dual_path(c, path));
                REQUIRE(is_non_revisiting(path).ok);
                REQUIRE(static_cast<int>(path.size()) - 1 <= n_used - c.d);
                REQUIRE(path.front() == c.facets[i]);
                REQUIRE(path.back() == c.facets[j]);
                CHECK(dual_distance(c, c.facets[i], c.facets[j]) <=
                      static_cast<int>(path.size()) - 1);
            }
    };
    check_all_pairs(barycentric_subdivision(boundary_simplex(2)));  // hexagon
    check_all_pairs(barycentric_subdivision(boundary_simplex(3)));
}

TEST_CASE("trivial and adjacent paths") {
    auto c = barycentric_subdivision(boundary_simplex(3));
    auto p0 = non_revisiting_path(c, c.facets[0], c.facets[0], true, false);
    CHECK(p0.size() == 1);
    auto g = dual_graph(c);
    int nb = g.adj[0][0];
    auto p1 = non_revisiting_path(c, c.facets[0], c.facets[nb], true, false);
    CHECK(p1.size() == 2);
}

TEST_CASE("determinism") {
    auto c = barycentric_subdivision(boundary_simplex(3));
    auto a = non_revisiting_path(c, c.facets[0], c.facets[17], true, false);
    auto b = non_revisiting_path(c, c.facets[0], c.facets[17], true, false);
    CHECK(a == b);
}

TEST_CASE("precondition checks") {
    PureComplex hollow(3, 2, {{0, 1}, {0, 2}, {1, 2}});  // normal but not flag
    CHECK_THROWS_AS(non_revisiting_path(hollow, Facet{0, 1}, Facet{1, 2}, true, true),
                    NotFlagError);
    // with the override it may succeed or report the failure point; the
    // hexagon-like 3-cycle happens to be fine for adjacent facets
    auto p = non_revisiting_path(hollow, Facet{0, 1}, Facet{1, 2}, false, true);
    CHECK(is_non_revisiting(p).ok);

    PureComplex pinched(5, 3, {{0, 1, 2}, {0, 3, 4}});
    CHECK_THROWS_AS(non_revisiting_path(pinched, Facet{0, 1, 2}, Facet{0, 3, 4}, true, true),
                    NotNormalError);
}
