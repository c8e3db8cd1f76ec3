#include <doctest.h>

#include <map>
#include <sstream>

#include "struclus/io.hpp"
#include "struclus/isomorphism.hpp"
#include "struclus/synth.hpp"

using namespace struclus;

namespace {

SynthConfig small(std::uint64_t seed) {
    SynthConfig c;
    c.dataset_size = 300;
    c.num_clusters = 10;
    c.seed = seed;
    return c;
}

std::string dump(const SyntheticDataset& d) {
    std::ostringstream out;
    write_graph_db(out, d.db);
    write_label_vector(out, d.truth(), "class");
    return out.str();
}

}  // namespace

TEST_CASE("generation is deterministic per seed") {
    for (auto w : {LabelWeighting::Decay, LabelWeighting::Sampled}) {
        auto c = small(4);
        c.label_weighting = w;
        CHECK(dump(generate(c)) == dump(generate(c)));
        auto d = c;
        d.seed = 5;
        CHECK(dump(generate(c)) != dump(generate(d)));
    }
}

TEST_CASE("class sizes, noise and connectivity") {
    auto c = small(6);
    const auto d = generate(c);
    REQUIRE(d.db.graphs.size() == 300);
    REQUIRE(d.classes.size() == 300);
    std::map<std::int64_t, std::size_t> counts;
    for (auto k : d.classes) ++counts[k];
    // each graph is noise with probability 0.05
    CHECK(counts[kNoiseClass] >= 5);
    CHECK(counts[kNoiseClass] <= 30);
    for (std::int64_t k = 0; k < 10; ++k) CHECK(counts[k] > 0);
    for (const auto& g : d.db.graphs) CHECK(g.is_connected());

    c.noise_graph_fraction = 0;
    const auto clean = generate(c);
    for (auto k : clean.classes) CHECK(k != kNoiseClass);

    const auto truth = d.truth();
    CHECK(truth.size() == 300);
    CHECK(truth.at(0) == d.classes[0]);
}

TEST_CASE("every class graph contains all seeds of its class") {
    auto c = small(7);
    c.dataset_size = 200;
    const auto d = generate(c);
    for (std::size_t i = 0; i < d.db.graphs.size(); ++i) {
        const auto k = d.classes[i];
        if (k == kNoiseClass) continue;
        REQUIRE(d.cluster_seeds[k].size() == c.seeds_per_cluster);
        for (const auto& s : d.cluster_seeds[k]) {
            CHECK(s.is_connected());
            CHECK(is_subgraph_iso(s, d.db.graphs[i]));
        }
    }
    CHECK(d.noise_seeds.size() == c.noise_seed_pool);
}

TEST_CASE("average graph size is near the published figure") {
    SynthConfig c;
    c.dataset_size = 10000;
    c.seed = 1;
    const auto d = generate(c);
    double v = 0;
    for (const auto& g : d.db.graphs) v += double(g.vertex_count());
    v /= double(d.db.graphs.size());
    CHECK(v >= 30);
    CHECK(v <= 45);
}

TEST_CASE("degenerate configurations are rejected") {
    SynthConfig c;
    c.num_vertex_labels = 0;
    CHECK_THROWS_AS(generate(c), std::invalid_argument);
    c = {};
    c.noise_graph_fraction = 1.5;
    CHECK_THROWS_AS(generate(c), std::invalid_argument);
    c = {};
    c.num_clusters = 0;
    CHECK_THROWS_AS(generate(c), std::invalid_argument);
}
