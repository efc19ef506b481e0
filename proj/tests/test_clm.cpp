#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "diameterlab/bounds.hpp"
#include "diameterlab/clm.hpp"
#include "diameterlab/complex_ops.hpp"
#include "diameterlab/constructions.hpp"
#include "diameterlab/diameter.hpp"
#include "diameterlab/nonpure.hpp"

using namespace dlab;

namespace {

Multiset ms(std::vector<int> exps) { return exps; }

}  // namespace

TEST_CASE("complete layering") {
    auto m = complete_clm(3, 2);
    CHECK(m.length() == 4);
    CHECK(m.layer_min == 2);
    CHECK(m.layer_max == 6);
    auto layer_lists = m.layers();
    // layer contents forced by the weighted sum rule
    auto facet_at = [&](int layer, int pos) { return m.base.facets[layer_lists[layer][pos]]; };
    CHECK(layer_lists[0].size() == 1);
    CHECK(facet_at(0, 0) == ms({2, 0, 0}));  // 11
    CHECK(layer_lists[1].size() == 1);
    CHECK(facet_at(1, 0) == ms({1, 1, 0}));  // 12
    CHECK(layer_lists[2].size() == 2);       // 13 and 22
    CHECK(layer_lists[3].size() == 1);
    CHECK(facet_at(3, 0) == ms({0, 1, 1}));  // 23
    CHECK(layer_lists[4].size() == 1);
    CHECK(facet_at(4, 0) == ms({0, 0, 2}));  // 33
    CHECK(validate_clm(m).ok);

    for (int n = 2; n <= 5; ++n)
        for (int d = 1; d <= 4; ++d) {
            auto c = complete_clm(n, d);
            CHECK(validate_clm(c).ok);
            CHECK(c.length() == d * (n - 1));
        }
    auto rank1 = complete_clm(4, 1);
    CHECK(rank1.base.size() == 4);
    CHECK(rank1.length() == 3);
}

TEST_CASE("injective layering") {
    auto m = injective_clm(4, 3);
    CHECK(m.length() == 9);
    CHECK(m.base.size() == 10);
    // 111,112,122,222,223,233,333,334,344,444 in weighted-sum order
    std::vector<Multiset> expected = {
        ms({3, 0, 0, 0}), ms({2, 1, 0, 0}), ms({1, 2, 0, 0}), ms({0, 3, 0, 0}),
        ms({0, 2, 1, 0}), ms({0, 1, 2, 0}), ms({0, 0, 3, 0}), ms({0, 0, 2, 1}),
        ms({0, 0, 1, 2}), ms({0, 0, 0, 3}),
    };
    auto layer_lists = m.layers();
    REQUIRE(layer_lists.size() == 10);
    for (int l = 0; l < 10; ++l) {
        REQUIRE(layer_lists[l].size() == 1);  // injective: one facet per layer
        CHECK(m.base.facets[layer_lists[l][0]] == expected[l]);
    }
    for (int n = 2; n <= 5; ++n)
        for (int d = 1; d <= 4; ++d) {
            auto c = injective_clm(n, d);
            CHECK(validate_clm(c).ok);
            CHECK(c.length() == d * (n - 1));
        }
}

TEST_CASE("validator catches a moved facet") {
    auto m = complete_clm(3, 2);
    // move facet 22 (exponents 0,2,0) from layer 4 to layer 6
    for (std::size_t i = 0; i < m.base.size(); ++i)
        if (m.base.facets[i] == ms({0, 2, 0})) m.layer_of[i] = 6;
    auto v = validate_clm(m);
    CHECK_FALSE(v.ok);
    CHECK(v.face == ms({0, 1, 0}));  // the star of element 2 now skips layer 4
    CHECK(v.missing_layer == 4);
}

TEST_CASE("single layer is always valid") {
    PureMulticomplex base(3, 2, {ms({2, 0, 0}), ms({0, 0, 2})});
    auto m = make_layered(base, {5, 5});
    CHECK(validate_clm(m).ok);
    CHECK(m.length() == 0);
}

TEST_CASE("layer by distance") {
    auto c = complete_multicomplex(4, 2);
    auto first = c.facets.front();
    auto m = layer_by_distance(c, first);
    CHECK(validate_clm(m).ok);
    CHECK(m.layer_min == 0);

    auto corridor = corridor_2complex(10);
    auto order = corridor_order(corridor);
    auto lm = layer_by_distance_complex(corridor, corridor.facets[order.front()]);
    CHECK(lm.length() == static_cast<int>(corridor.size()) - 1);
    CHECK(validate_clm(lm).ok);

    // Complete complexes: eccentricity equals min(d, n-d) everywhere.
    for (int n = 3; n <= 6; ++n)
        for (int d = 1; d < n; ++d) {
            std::vector<Multiset> facets;
            for (const auto& f : complete_complex(n, d).facets)
                facets.push_back(facet_to_multiset(f, n));
            PureMulticomplex mc(n, d, std::move(facets));
            auto layered = layer_by_distance(mc, mc.facets.front());
            CHECK(layered.length() == std::min(d, n - d));
            CHECK(validate_clm(layered).ok);
        }
}

TEST_CASE("clm link") {
    auto m = complete_clm(4, 3);
    CHECK(clm_link(m, ms({0, 0, 0, 0})).base == m.base);
    auto lk = clm_link(m, ms({0, 0, 0, 1}));
    CHECK(lk.base.d == 2);
    CHECK(validate_clm(lk).ok);
    auto lk2 = clm_link(m, ms({0, 2, 0, 0}));
    CHECK(lk2.base.d == 1);
    CHECK(validate_clm(lk2).ok);
    CHECK_THROWS_AS(clm_link(m, ms({4, 0, 0, 0})), NotAFaceError);
}

TEST_CASE("kk split") {
    auto m = complete_clm(4, 2);
    auto split = kk_split(m);
    CHECK(split.prefix + split.middle + split.suffix == m.layer_count());
    if (split.middle >= 1) {
        REQUIRE(split.witness.has_value());
        for (int l = split.prefix; l < split.prefix + split.middle; ++l) {
            auto sup = m.layer_support(l);
            CHECK(std::find(sup.begin(), sup.end(), *split.witness) != sup.end());
        }
    }
    // prefix lengths bound the halved problem
    if (split.prefix >= 1)
        CHECK(split.prefix - 1 <= kalai_kleitman_clm(m.base.n / 2, m.base.d));
}

TEST_CASE("bl decomposition") {
    SUBCASE("single layer gives one piece") {
        PureMulticomplex base(3, 2, {ms({2, 0, 0})});
        auto m = make_layered(base, {0});
        auto pieces = bl_decompose(m);
        CHECK(pieces.size() == 1);
    }
    SUBCASE("piece arithmetic on layered families") {
        for (auto m : {complete_clm(3, 3), injective_clm(4, 2), complete_clm(4, 2)}) {
            auto pieces = bl_decompose(m);
            int total = 0, nsum = 0;
            for (const auto& p : pieces) {
                total += p.piece.length();
                nsum += p.n_used;
                for (int l = 0; l < p.piece.layer_count(); ++l) {
                    auto sup = p.piece.layer_support(l);
                    CHECK(std::find(sup.begin(), sup.end(), p.witness) != sup.end());
                }
            }
            CHECK(total + static_cast<int>(pieces.size()) - 1 == m.length());
            CHECK(nsum <= 2 * m.base.n - 1);
        }
    }
}

TEST_CASE("exhaustive search reproduces the small values") {
    for (int d = 1; d <= 3; ++d) {
        auto r = max_clm_search(2, d);
        CHECK(r.max_length == d);
        CHECK(validate_clm(r.witness).ok);
        CHECK(r.witness.length() == d);
    }
    auto r32 = max_clm_search(3, 2);
    CHECK(r32.max_length == 4);
    CHECK(validate_clm(r32.witness).ok);
    CHECK(r32.witness.length() == 4);
    CHECK_THROWS_AS(max_clm_search(6, 4), SizeLimitError);
}

TEST_CASE("search length never beats the proven bounds") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng() % 3);
        int d = 2 + static_cast<int>(rng() % 3);
        auto m = random_clm(n, d, rng);
        if (m.base.size() == 0) continue;
        REQUIRE(validate_clm(m).ok);
        CHECK(m.length() <= kalai_kleitman_clm(n, d) + 1e-9);
        CHECK(m.length() <= barnette_larman_clm(n, d));
    }
}

TEST_CASE("substitution to a simplicial layered family") {
    auto m = complete_clm(3, 2);
    auto sub = multicomplex_to_complex(m);
    CHECK(sub.base.n == 6);
    CHECK(sub.base.d == 2);
    CHECK(sub.length() == 4);
    CHECK(validate_clm(sub).ok);
    auto view = as_complex(sub.base);
    CHECK(view.size() == m.base.size());

    auto inj = injective_clm(3, 3);
    auto sub2 = multicomplex_to_complex(inj);
    CHECK(sub2.base.size() == inj.base.size());  // injective stays injective
    CHECK(sub2.length() == inj.length());
    CHECK(validate_clm(sub2).ok);
}

TEST_CASE("nonpure families") {
    auto h5 = example_hnp5();
    CHECK(h5.length() == 11);
    CHECK(validate_nonpure(h5).ok);

    auto f = seed_hnp1();
    CHECK(f.length() == 2);
    for (int i = 0; i < 5; ++i) {
        int before = f.length();
        f = extend_nonpure(f);
        CHECK(f.length() == before + 2);
        CHECK(validate_nonpure(f).ok);
    }
    CHECK(f.n == 6);

    NonpureLayeredFamily broken;
    broken.n = 2;
    broken.layers = {{1u}, {2u}, {1u}};  // {1}, {2}, {1}: star of {1} skips a layer
    CHECK_FALSE(validate_nonpure(broken).ok);
}
