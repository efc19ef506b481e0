#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diameterlab/legal.hpp"

using namespace dlab;

TEST_CASE("base cases") {
    LegalMemo memo;
    CHECK(legal_check({0, {0u}}, memo));        // ({}) on 0 elements
    CHECK_FALSE(legal_check({0, {0u, 0u}}, memo));
    CHECK(legal_check({1, {1u}}, memo));        // ({1})
    CHECK(legal_check({1, {1u, 0u}}, memo));    // ({1},{})
    CHECK(legal_check({1, {0u, 1u}}, memo));    // reversal
    CHECK_FALSE(legal_check({1, {1u, 1u}}, memo));  // (A,A) on 1 element fails the shrink
    CHECK(legal_check({2, {3u, 3u}}, memo));    // (A,A) with |A| = 2 on 2 elements
}

TEST_CASE("convexity violations are rejected") {
    LegalMemo memo;
    CHECK_FALSE(legal_check({1, {1u, 0u, 1u}}, memo));
    CHECK_FALSE(legal_check({2, {1u, 2u, 1u}}, memo));
}

TEST_CASE("subsequence condition bites") {
    LegalMemo memo;
    // ({1},{},{2}) has the legal subsequences but also ({},{2}),... all fine;
    // the sequence itself is convex and should be legal.
    CHECK(legal_check({2, {1u, 0u, 2u}}, memo));
    // (A,{},A) is rejected through its subsequence/convexity interplay.
    CHECK_FALSE(legal_check({2, {3u, 0u, 3u}}, memo));
}

TEST_CASE("doubling") {
    LegalMemo memo;
    LegalSequence pair{1, {1u, 0u}};
    auto d1 = legal_double(pair, 1);
    CHECK(d1.length() == 4);
    CHECK(d1.n == 4);
    CHECK(legal_check(d1, memo));

    auto d2 = legal_double(pair, 2);
    CHECK(d2.length() == 6);
    CHECK(d2.n == 6);

    LegalSequence single{1, {1u}};
    auto d3 = legal_double(single, 3);
    CHECK(d3.length() == 4);  // (i+1)m = 4*1
    CHECK(d3.n == 8);
}

TEST_CASE("caps guard the recursion") {
    LegalMemo memo;
    LegalSequence big{5, {1u, 2u, 4u, 8u, 16u}};
    CHECK_THROWS_AS(legal_check(big, memo), SizeLimitError);
    LegalSequence longseq{1, std::vector<std::uint32_t>(9, 1u)};
    CHECK_THROWS_AS(legal_check(longseq, memo), SizeLimitError);
}
