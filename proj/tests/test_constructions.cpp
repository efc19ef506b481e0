#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "diameterlab/complex_ops.hpp"
#include "diameterlab/constructions.hpp"
#include "diameterlab/diameter.hpp"

using namespace dlab;

TEST_CASE("complete complexes") {
    CHECK(complete_complex(3, 2).facets == std::vector<Facet>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(complete_complex(6, 3).size() == 20);
    CHECK(complete_multicomplex(3, 2).size() == 6);
    CHECK(complete_multicomplex(4, 3).size() == binomial(6, 3));
}

TEST_CASE("hamiltonian decomposition covers K_{2k+1}") {
    for (int k = 1; k <= 8; ++k) {
        auto hd = hamiltonian_decomposition(k);
        REQUIRE(static_cast<int>(hd.cycles.size()) == k);
        int m = 2 * k + 1;
        std::set<std::pair<int, int>> edges;
        for (const auto& cyc : hd.cycles) {
            REQUIRE(static_cast<int>(cyc.size()) == m);
            std::set<int> verts(cyc.begin(), cyc.end());
            CHECK(static_cast<int>(verts.size()) == m);
            for (int i = 0; i < m; ++i) {
                int a = cyc[i], b = cyc[(i + 1) % m];
                auto inserted = edges.emplace(std::min(a, b), std::max(a, b));
                CHECK(inserted.second);
            }
        }
        CHECK(static_cast<long long>(edges.size()) == binomial(m, 2));
    }
}

TEST_CASE("two-dimensional corridors") {
    auto c13 = corridor_2complex(13);
    CHECK(c13.size() == 35);
    CHECK(is_corridor(c13));
    CHECK(dual_diameter(c13).diameter == 34);

    // n = 14 adds only an unused vertex.
    auto c14 = corridor_2complex(14);
    CHECK(c14.facets == c13.facets);
    CHECK(c14.n == 14);
    CHECK(c14.used_vertices().size() == 13);

    CHECK_THROWS_AS(corridor_2complex(6), TooSmallError);

    for (int n = 7; n <= 24; ++n) {
        auto c = corridor_2complex(n);
        int k = (n - 1) / 3;
        CHECK(static_cast<int>(c.size()) == 2 * k * k + k - 1);
        CHECK(is_corridor(c));
        CHECK(is_pseudomanifold(c));
    }
}

TEST_CASE("join multiplies facet counts and products dual graphs") {
    std::mt19937_64 rng(17);
    auto random_complex = [&](int n, int d) {
        auto full = complete_complex(n, d);
        std::vector<Facet> facets;
        for (const auto& f : full.facets)
            if (rng() % 2 == 0) facets.push_back(f);
        if (facets.empty()) facets.push_back(full.facets[0]);
        return PureComplex(n, d, std::move(facets));
    };
    for (int t = 0; t < 20; ++t) {
        auto c1 = random_complex(4, 2);
        auto c2 = random_complex(3, 1);
        auto jn = join(c1, c2);
        CHECK(jn.size() == c1.size() * c2.size());
        CHECK(jn.d == c1.d + c2.d);
        CHECK(jn.n == c1.n + c2.n);
    }
    // Cone: join with a single facet leaves the dual graph unchanged.
    auto base = complete_complex(4, 2);
    PureComplex point(1, 1, {{0}});
    auto cone = join(base, point);
    auto g1 = dual_graph(base), g2 = dual_graph(cone);
    REQUIRE(g1.size() == g2.size());
    for (std::size_t i = 0; i < g1.size(); ++i) CHECK(g1.adj[i] == g2.adj[i]);
}

TEST_CASE("vertical product path meets the length formula") {
    // Oracle for the smallest case: enumerated by hand, length 6 in the 3x3 grid.
    auto p22 = product_induced_path(2, 2, GridStrategy::vertical);
    CHECK(static_cast<int>(p22.size()) - 1 == 6);
    for (int l1 = 1; l1 <= 8; ++l1)
        for (int l2 = 1; l2 <= 8; ++l2) {
            auto p = product_induced_path(l1, l2, GridStrategy::vertical);
            CHECK(static_cast<int>(p.size()) - 1 == (l1 / 2 + 1) * l2 + l1);
            // chord check
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = i + 1; j < p.size(); ++j) {
                    int dist = std::abs(p[i].first - p[j].first) +
                               std::abs(p[i].second - p[j].second);
                    CHECK(dist != 0);
                    CHECK((dist == 1) == (j == i + 1));
                }
        }
}

TEST_CASE("zigzag product path is induced and dense") {
    for (int l1 = 2; l1 <= 8; ++l1)
        for (int l2 = 2; l2 <= 8; ++l2) {
            auto p = product_induced_path(l1, l2, GridStrategy::zigzag);
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = i + 1; j < p.size(); ++j) {
                    int dist = std::abs(p[i].first - p[j].first) +
                               std::abs(p[i].second - p[j].second);
                    CHECK(dist != 0);
                    CHECK((dist == 1) == (j == i + 1));
                }
        }
    auto big = product_induced_path(12, 12, GridStrategy::zigzag);
    CHECK(static_cast<double>(big.size()) / 169.0 >= 0.6);
}

TEST_CASE("iterated join corridors") {
    auto base = corridor_2complex(7);
    auto once = iterated_join_corridor(7, 3, 1);
    CHECK(once == base);

    auto twice = iterated_join_corridor(7, 3, 2);
    CHECK(is_corridor(twice));
    CHECK(twice.d == 6);
    CHECK(twice.n == 14);
    long long l1 = static_cast<long long>(base.size()) - 1;
    CHECK(static_cast<long long>(twice.size()) - 1 >= (l1 * l1 + 1) / 2);

    auto paths = iterated_join_corridor(6, 2, 3);
    CHECK(is_corridor(paths));
    CHECK(paths.d == 6);
}

TEST_CASE("nabla construction") {
    auto n11 = nabla(1, 1);
    CHECK(n11.size() == 6);
    CHECK(n11.n == 6);
    CHECK(is_strongly_connected(n11));

    auto n22 = nabla(2, 2);
    CHECK(n22.n == 10);
    CHECK(n22.size() == 30);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 2; ++b) {
            auto nb = nabla(a, b);
            CHECK(static_cast<long long>(nb.size()) ==
                  (a + b + 1) * binomial(a + b, a));
            CHECK(is_strongly_connected(nb));
        }
    CHECK(is_normal(nabla(2, 2)));
}

TEST_CASE("barycentric subdivision") {
    auto hexagon = barycentric_subdivision(boundary_simplex(2));
    CHECK(hexagon.n == 6);
    CHECK(hexagon.size() == 6);
    CHECK(is_corridor(hexagon) == false);  // it is a 6-cycle, not a path
    CHECK(is_strongly_connected(hexagon));

    auto bd3 = barycentric_subdivision(boundary_simplex(3));
    CHECK(bd3.n == 14);
    CHECK(bd3.size() == 24);
    CHECK(is_flag(bd3));
    CHECK(is_normal(bd3));
}
