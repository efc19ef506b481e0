#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diameterlab/complex_ops.hpp"
#include "diameterlab/constructions.hpp"
#include "diameterlab/decompose.hpp"

using namespace dlab;

TEST_CASE("base cases") {
    PureComplex single(4, 3, {{0, 1, 2}});
    auto r = is_k_decomposable(single, 0);
    CHECK(r.decomposable);
    REQUIRE(r.certificate);
    CHECK(r.certificate->leaf);
    CHECK(verify_shedding_tree(single, *r.certificate, 0));
}

TEST_CASE("simplex boundaries are vertex decomposable") {
    for (int d = 2; d <= 4; ++d) {
        auto c = boundary_simplex(d);
        auto r = is_k_decomposable(c, 0);
        CHECK(r.decomposable);
        REQUIRE(r.certificate);
        CHECK(verify_shedding_tree(c, *r.certificate, 0));
        auto w = is_weakly_k_decomposable(c, 0);
        CHECK(w.decomposable);
        CHECK(verify_shedding_sequence(c, w.shedding_sequence, 0));
    }
}

TEST_CASE("complete complexes are vertex decomposable") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}}) {
        auto c = complete_complex(n, d);
        auto r = is_k_decomposable(c, 0);
        CHECK(r.decomposable);
        CHECK(verify_shedding_tree(c, *r.certificate, 0));
    }
}

TEST_CASE("monotonicity in k and strength") {
    auto c = complete_complex(5, 3);
    auto k0 = is_k_decomposable(c, 0);
    auto k1 = is_k_decomposable(c, 1);
    CHECK(k0.decomposable);
    CHECK(k1.decomposable);  // k-decomposable implies (k+1)-decomposable
    auto weak = is_weakly_k_decomposable(c, 0);
    CHECK(weak.decomposable);  // strong implies weak
}

TEST_CASE("nabla(2,2) is not weakly vertex-decomposable") {
    auto nab = nabla(2, 2);
    auto r = is_weakly_k_decomposable(nab, 0);
    CHECK_FALSE(r.decomposable);
    CHECK(r.states > 0);
}

TEST_CASE("nabla(1,1) weak decomposability, frozen from an exhaustive run") {
    auto nab = nabla(1, 1);
    auto r = is_weakly_k_decomposable(nab, 0);
    CHECK(r.decomposable);
    CHECK(verify_shedding_sequence(nab, r.shedding_sequence, 0));
}

TEST_CASE("obstruction witnesses") {
    auto cases = dk_obstruction_witness(2, 2);
    REQUIRE(cases.size() == 3);
    for (const auto& dk : cases) {
        CHECK(dk.non_pure);
        CHECK(dk.surviving_facet.size() == 4);
        CHECK(dk.uncovered_ridge.size() == 3);
    }
    auto cases32 = dk_obstruction_witness(3, 2);
    for (const auto& dk : cases32) CHECK(dk.non_pure);
    CHECK_THROWS_AS(dk_obstruction_witness(1, 2), InputError);
}

TEST_CASE("provan-billera inequalities") {
    for (int d = 2; d <= 3; ++d) {
        auto report = provan_billera_check(boundary_simplex(d), 0);
        CHECK(report.decomposable);
        CHECK(report.diameter == 1);
        CHECK(report.strong_ok);
        CHECK(report.weak_ok);
    }
    auto report = provan_billera_check(complete_complex(5, 2), 0);
    CHECK(report.decomposable);
    CHECK(report.strong_ok);  // diam <= f_0 - d
    CHECK(report.weak_ok);    // diam <= 2 f_0
}

TEST_CASE("corrupted certificates are rejected") {
    auto c = boundary_simplex(3);
    auto r = is_k_decomposable(c, 0);
    REQUIRE(r.decomposable);
    SheddingTree bad;
    bad.leaf = false;
    bad.shedding_face = {0, 1};  // too large for k=0
    CHECK_FALSE(verify_shedding_tree(c, bad, 0));
    std::vector<Facet> bogus_seq = {{0}, {0}};  // re-shedding a deleted vertex
    CHECK_FALSE(verify_shedding_sequence(c, bogus_seq, 0));
}
