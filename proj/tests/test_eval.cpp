#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "struclus/eval.hpp"

using namespace struclus;

TEST_CASE("identical partitions score 1") {
    std::mt19937_64 rng(51);
    const auto a = oracle::random_labels(rng, 30, 4);
    CHECK(nvi(a, a) == doctest::Approx(1.0));
    CHECK(fowlkes_mallows(a, a) == doctest::Approx(1.0));
    CHECK(purity(a, a) == doctest::Approx(1.0));
}

TEST_CASE("singletons against one block") {
    LabelVector single, block;
    for (std::uint64_t i = 0; i < 4; ++i) {
        single[i] = static_cast<std::int64_t>(i);
        block[i] = 0;
    }
    CHECK(nvi(single, block) == doctest::Approx(0.0));
    CHECK(fowlkes_mallows(single, block) == 0.0);
    CHECK(fowlkes_mallows(single, single) == 1.0);
}

TEST_CASE("purity of one cluster over a 60/40 split") {
    LabelVector clusters, truth;
    for (std::uint64_t i = 0; i < 100; ++i) {
        clusters[i] = 0;
        truth[i] = i < 60 ? 1 : 2;
    }
    CHECK(purity(clusters, truth) == doctest::Approx(0.6));
    // not symmetric
    CHECK(purity(truth, clusters) == doctest::Approx(1.0));
}

TEST_CASE("measures agree with brute force") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng() % 40;
        const auto a = oracle::random_labels(rng, n, 1 + rng() % 6);
        const auto b = oracle::random_labels(rng, n, 1 + rng() % 6);
        CHECK(nvi(a, b) == doctest::Approx(oracle::nvi(a, b)).epsilon(1e-12));
        CHECK(fowlkes_mallows(a, b) == doctest::Approx(oracle::fowlkes_mallows(a, b)).epsilon(1e-12));
        CHECK(purity(a, b) == doctest::Approx(oracle::purity(a, b)).epsilon(1e-12));
        CHECK(nvi(a, b) == doctest::Approx(nvi(b, a)).epsilon(1e-12));
        CHECK(fowlkes_mallows(a, b) == doctest::Approx(fowlkes_mallows(b, a)).epsilon(1e-12));
        CHECK(nvi(a, b) >= -1e-12);
        CHECK(nvi(a, b) <= 1 + 1e-12);
    }
}

TEST_CASE("measures ignore how ids are named") {
    std::mt19937_64 rng(53);
    const auto a = oracle::random_labels(rng, 50, 5);
    const auto b = oracle::random_labels(rng, 50, 5);
    LabelVector renamed;
    for (const auto& [id, v] : a) renamed[id] = 1000 - 7 * v;
    CHECK(nvi(renamed, b) == doctest::Approx(nvi(a, b)).epsilon(1e-12));
    CHECK(fowlkes_mallows(renamed, b) == doctest::Approx(fowlkes_mallows(a, b)).epsilon(1e-12));
    CHECK(purity(renamed, b) == doctest::Approx(purity(a, b)).epsilon(1e-12));
}

TEST_CASE("mismatched inputs are rejected") {
    LabelVector a{{0, 0}, {1, 0}}, b{{0, 0}, {2, 0}}, one{{0, 0}};
    CHECK_THROWS_AS(nvi(a, b), std::invalid_argument);
    CHECK_THROWS_AS(fowlkes_mallows(a, b), std::invalid_argument);
    CHECK_THROWS_AS(purity(a, b), std::invalid_argument);
    CHECK_THROWS_AS(nvi(one, one), std::invalid_argument);
}
