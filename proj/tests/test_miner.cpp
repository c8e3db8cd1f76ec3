#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "struclus/isomorphism.hpp"
#include "struclus/miner.hpp"
#include "struclus/synth.hpp"

using namespace struclus;

namespace {

LabeledGraph triangle(LabelId v, LabelId e) {
    LabeledGraph g;
    for (int i = 0; i < 3; ++i) g.add_vertex(v);
    g.add_edge(0, 1, e);
    g.add_edge(1, 2, e);
    g.add_edge(0, 2, e);
    return g;
}

MinerOptions exact_opts() {
    MinerOptions o;
    o.exact = true;
    return o;
}

}  // namespace

TEST_CASE("seeds of a uniform single-edge corpus") {
    LabeledGraph g;
    g.add_vertex(1);
    g.add_vertex(2);
    g.add_edge(0, 1, 100);
    std::vector<LabeledGraph> graphs(6, g);
    const auto s = enumerate_seeds(make_corpus(graphs), 1.0);
    CHECK(s.freq_vertices == std::vector<LabelId>{1, 2});
    REQUIRE(s.freq_paths.size() == 1);
    CHECK(s.freq_paths[0] == PathType{1, 100, 2});
    CHECK(make_path_type(2, 100, 1) == PathType{1, 100, 2});
}

TEST_CASE("disjoint alphabets have no common seeds") {
    std::vector<LabeledGraph> graphs{triangle(1, 100), triangle(2, 101)};
    const auto s = enumerate_seeds(make_corpus(graphs), 1.0);
    CHECK(s.freq_vertices.empty());
    CHECK(s.freq_paths.empty());
}

TEST_CASE("seeds agree with brute-force presence counting") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<LabeledGraph> graphs;
        for (int i = 0; i < 20; ++i) graphs.push_back(oracle::random_graph(rng, 2 + rng() % 6, 0.4, 4, 2));
        const auto corpus = make_corpus(graphs);
        const auto s = enumerate_seeds(corpus, 0.4);
        std::vector<LabelId> want_v;
        for (LabelId l = 0; l < 4; ++l) {
            LabeledGraph p;
            p.add_vertex(l);
            if (oracle::frequent(p, corpus, 0.4)) want_v.push_back(l);
        }
        CHECK(s.freq_vertices == want_v);
        std::vector<PathType> want_p;
        for (LabelId a = 0; a < 4; ++a)
            for (LabelId b = a; b < 4; ++b)
                for (LabelId e = 100; e < 102; ++e) {
                    LabeledGraph p;
                    p.add_vertex(a);
                    p.add_vertex(b);
                    p.add_edge(0, 1, e);
                    if (oracle::frequent(p, corpus, 0.4)) want_p.push_back({a, e, b});
                }
        std::sort(want_p.begin(), want_p.end());
        CHECK(s.freq_paths == want_p);
    }
}

TEST_CASE("the maximal pattern of identical triangles is the triangle") {
    std::vector<LabeledGraph> graphs(7, triangle(3, 100));
    const auto corpus = make_corpus(graphs);
    const auto seeds = enumerate_seeds(corpus, 1.0);
    for (std::uint64_t s = 0; s < 10; ++s) {
        Rng rng(s);
        const auto p = sample_maximal(corpus, 1.0, seeds, {1, 0.5}, rng, exact_opts());
        REQUIRE(p);
        CHECK(are_isomorphic(*p, triangle(3, 100)));
    }
}

TEST_CASE("single-vertex corpus gives a single-vertex pattern") {
    LabeledGraph c;
    c.add_vertex(5);
    std::vector<LabeledGraph> graphs(4, c);
    const auto corpus = make_corpus(graphs);
    Rng rng(1);
    const auto p = sample_maximal(corpus, 1.0, enumerate_seeds(corpus, 1.0), {1, 0.5}, rng, exact_opts());
    REQUIRE(p);
    CHECK(p->vertex_count() == 1);
    CHECK(p->edge_count() == 0);
    CHECK(p->vertex_label(0) == 5);
}

TEST_CASE("exact-mode samples are frequent, connected and maximal") {
    std::mt19937_64 g(42);
    // Shared core so that patterns beyond single edges are frequent.
    const auto core = oracle::random_connected(g, 5, 0.2, 3, 2);
    std::vector<LabeledGraph> graphs;
    for (int i = 0; i < 30; ++i) {
        LabeledGraph x = (i % 3 == 0) ? oracle::random_connected(g, 6, 0.2, 3, 2) : core;
        const auto n0 = x.vertex_count();
        for (int k = 0; k < 3; ++k) {
            const auto v = x.add_vertex(g() % 3);
            x.add_edge(static_cast<VertexId>(g() % n0), v, 100 + g() % 2);
        }
        graphs.push_back(std::move(x));
    }
    const auto corpus = make_corpus(graphs);
    const double ms = 0.5;
    const auto seeds = enumerate_seeds(corpus, ms);
    for (std::uint64_t s = 0; s < 50; ++s) {
        Rng rng(s);
        const auto p = sample_maximal(corpus, ms, seeds, {1, 0.5}, rng, exact_opts());
        REQUIRE(p);
        CHECK(p->is_connected());
        CHECK(oracle::frequent(*p, corpus, ms));
        for (const auto& q : oracle::one_step_extensions(*p, corpus)) CHECK_FALSE(oracle::frequent(q, corpus, ms));
    }
}

TEST_CASE("binomial tests per run never exceed the budget") {
    SynthConfig sc;
    sc.dataset_size = 300;
    sc.num_clusters = 3;
    sc.seed = 5;
    const auto data = generate(sc);
    const auto corpus = make_corpus(data.db.graphs);
    const MinerOptions opts;
    const auto seeds = enumerate_seeds(corpus, 0.3);
    const auto budget = mining_budget(corpus, 0.3, seeds, opts);
    for (std::uint64_t s = 0; s < 10; ++s) {
        Rng rng(s);
        std::size_t used = 0;
        const auto p = sample_maximal(corpus, 0.3, seeds, budget, rng, opts, nullptr, &used);
        REQUIRE(p);
        CHECK(used <= budget.max_tests);
    }
    // A tiny budget still terminates.
    Rng rng(1);
    std::size_t used = 0;
    sample_maximal(corpus, 0.3, seeds, {1, 0.5}, rng, opts, nullptr, &used);
    CHECK(used <= 1);
}

TEST_CASE("candidate sampling") {
    SUBCASE("uniform corpus dedups to one candidate") {
        std::vector<LabeledGraph> graphs(10, triangle(2, 100));
        const auto c = sample_candidates(make_corpus(graphs), 0.5, 25, exact_opts(), 7);
        REQUIRE(c.size() == 1);
        CHECK(are_isomorphic(c[0], triangle(2, 100)));
    }
    SUBCASE("no frequent vertex means no candidates") {
        std::vector<LabeledGraph> graphs{triangle(1, 100), triangle(2, 100)};
        CHECK(sample_candidates(make_corpus(graphs), 1.0, 25, exact_opts(), 7).empty());
    }
    SUBCASE("candidates on a seeded cluster are exactly frequent and distinct") {
        SynthConfig sc;
        sc.dataset_size = 60;
        sc.num_clusters = 1;
        sc.noise_graph_fraction = 0;
        sc.seed = 3;
        const auto data = generate(sc);
        const auto corpus = make_corpus(data.db.graphs);
        const auto c = sample_candidates(corpus, 0.8, 25, exact_opts(), 11);
        REQUIRE_FALSE(c.empty());
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(exact_support(c[i], corpus) >= 0.8 - 1e-9);
            for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(are_isomorphic(c[i], c[j]));
        }
    }
}

TEST_CASE("candidates do not depend on the thread count") {
    SynthConfig sc;
    sc.dataset_size = 200;
    sc.num_clusters = 4;
    sc.seed = 8;
    const auto data = generate(sc);
    const auto corpus = make_corpus(data.db.graphs);
    MinerOptions opts;
    opts.max_batches = 2;
    const auto a = sample_candidates(corpus, 0.2, 10, opts, 99, Executor(1));
    const auto b = sample_candidates(corpus, 0.2, 10, opts, 99, Executor(4));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].vertex_labels() == b[i].vertex_labels());
        CHECK(a[i].edges() == b[i].edges());
    }
}
