#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "struclus/isomorphism.hpp"

using namespace struclus;

namespace {

LabeledGraph path(std::initializer_list<LabelId> labels, LabelId edge = 100) {
    LabeledGraph g;
    for (LabelId l : labels) g.add_vertex(l);
    for (VertexId v = 1; v < g.vertex_count(); ++v) g.add_edge(v - 1, v, edge);
    return g;
}

}  // namespace

TEST_CASE("subgraph isomorphism basics") {
    LabeledGraph c;
    c.add_vertex(0);
    CHECK(is_subgraph_iso(c, path({0, 0})));

    auto triangle = path({0, 0, 0});
    triangle.add_edge(0, 2, 100);
    CHECK_FALSE(is_subgraph_iso(triangle, path({0, 0, 0})));
    CHECK(is_subgraph_iso(path({0, 0, 0}), triangle));

    CHECK(is_subgraph_iso(LabeledGraph{}, c));
    CHECK(is_subgraph_iso(LabeledGraph{}, LabeledGraph{}));
    CHECK_FALSE(is_subgraph_iso(c, LabeledGraph{}));
    // edge label must match
    CHECK_FALSE(is_subgraph_iso(path({0, 0}, 101), path({0, 0, 0}, 100)));
}

TEST_CASE("subgraph isomorphism agrees with injection enumeration") {
    std::mt19937_64 rng(11);
    std::size_t positives = 0;
    for (int i = 0; i < 300; ++i) {
        const auto target = oracle::random_graph(rng, 1 + rng() % 9, 0.35, 2, 2);
        // Half the patterns are carved out of the target so that both answers occur.
        const auto pattern = (i % 2 == 0 && target.vertex_count() > 0)
                                 ? oracle::random_connected_subgraph(rng, target, rng() % 6)
                                 : oracle::random_graph(rng, 1 + rng() % 6, 0.4, 2, 2);
        if (pattern.vertex_count() > 6) continue;
        const bool expected = oracle::subgraph_iso(pattern, target);
        positives += expected;
        CHECK(is_subgraph_iso(pattern, target) == expected);
    }
    CHECK(positives > 50);
}

TEST_CASE("subgraph isomorphism is reflexive and transitive") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 100; ++i) {
        const auto c = oracle::random_connected(rng, 3 + rng() % 7, 0.2, 3, 2);
        const auto b = oracle::random_connected_subgraph(rng, c, 1 + rng() % 6);
        const auto a = oracle::random_connected_subgraph(rng, b, rng() % 4);
        CHECK(is_subgraph_iso(c, c));
        CHECK(is_subgraph_iso(a, b));
        CHECK(is_subgraph_iso(b, c));
        CHECK(is_subgraph_iso(a, c));
    }
}

TEST_CASE("matcher can be reused across targets") {
    const auto p = path({0, 1, 0});
    const SubgraphMatcher m(p);
    CHECK(m.matches(path({1, 0, 1, 0})));
    CHECK_FALSE(m.matches(path({0, 0, 1})));
    CHECK(m.matches(path({0, 1, 0})));
}

TEST_CASE("isomorphism") {
    auto a = path({0, 1, 2});
    LabeledGraph b;
    b.add_vertex(2);
    b.add_vertex(0);
    b.add_vertex(1);
    b.add_edge(1, 2, 100);
    b.add_edge(2, 0, 100);
    CHECK(are_isomorphic(a, b));
    CHECK_FALSE(are_isomorphic(a, path({0, 1, 2, 2})));
    CHECK_FALSE(are_isomorphic(a, path({0, 2, 1})));
}

TEST_CASE("mcs examples") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        const auto g = oracle::random_connected(rng, 1 + rng() % 8, 0.2, 3, 2);
        CHECK(mcs_size(g, g).value == size(g).value);
    }
    CHECK(mcs_size(path({0, 0}), path({1, 1})).value == 0);
    CHECK(mcs_size(path({0, 0, 1}), path({1, 0, 0, 2})).value == 5);
    // Connected only: two separate matches of one edge each do not add up.
    CHECK(mcs_size(path({0, 1, 2, 3}), path({0, 1, 5, 2, 3})).value == 3);
    CHECK(mcs_size(LabeledGraph{}, path({0})).value == 0);
}

TEST_CASE("mcs agrees with exhaustive enumeration") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 150; ++i) {
        const auto g = oracle::random_graph(rng, 1 + rng() % 7, 0.35, 2, 2);
        const auto h = oracle::random_graph(rng, 1 + rng() % 7, 0.35, 2, 2);
        const std::size_t expected = oracle::mcs_size(g, h);
        CHECK(mcs_size(g, h).value == expected);
        CHECK(mcs_size(h, g).value == expected);
        CHECK(mcs_upper_bound(g, h).value >= expected);
        CHECK(expected <= std::min(size(g).value, size(h).value));
        // Threshold mode only has to get the comparison right.
        for (std::size_t lb : {std::size_t{1}, expected, expected + 1, expected + 3}) {
            const auto r = mcs_size(g, h, GraphSize{lb});
            CHECK((r.value >= lb) == (expected >= lb));
        }
    }
}

TEST_CASE("mcs of an embedded connected pattern is its size") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 60; ++i) {
        const auto h = oracle::random_connected(rng, 3 + rng() % 8, 0.25, 3, 2);
        const auto g = oracle::random_connected_subgraph(rng, h, 1 + rng() % 7);
        CHECK(mcs_size(g, h).value == size(g).value);
    }
}
