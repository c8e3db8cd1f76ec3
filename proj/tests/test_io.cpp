#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "struclus/io.hpp"
#include "struclus/synth.hpp"

using namespace struclus;

namespace {

GraphDatabase parse(const std::string& text) {
    std::istringstream in(text);
    return read_graph_db(in);
}

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const IoError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("reading small transactions") {
    const auto one = parse("t # 0\nv 0 C\n");
    REQUIRE(one.graphs.size() == 1);
    CHECK(one.graphs[0].vertex_count() == 1);

    const auto edge = parse("t # 0\nv 0 C\nv 1 C\ne 0 1 s\n");
    REQUIRE(edge.graphs.size() == 1);
    CHECK(size(edge.graphs[0]).value == 3);
    CHECK(edge.labels->name(edge.graphs[0].edges()[0].label) == "s");

    const auto two = parse("\nt # 5\nv 0 A\n\nt # 9\nv 0 B\nt # -1\nt # 3\nv 0 A\n");
    CHECK(two.graphs.size() == 2);
    CHECK(two.labels->size() == 2);
}

TEST_CASE("malformed input names the line") {
    CHECK(error_of("t # 0\nv 1 C\n").find("line 2") != std::string::npos);
    CHECK(error_of("t # 0\nv 0 C\ne 0 3 s\n").find("line 3") != std::string::npos);
    CHECK(error_of("t # 0\nv 0 C\nv 1 C\ne 0 1 s\ne 1 0 s\n").find("line 5") != std::string::npos);
    CHECK(error_of("v 0 C\n").find("line 1") != std::string::npos);
    CHECK(error_of("t # 0\nx 1\n").find("line 2") != std::string::npos);
    CHECK(error_of("t 0\n").find("line 1") != std::string::npos);
    CHECK_THROWS_AS(read_graph_db(std::filesystem::path("/nonexistent/file")), IoError);
}

TEST_CASE("dataset round trip") {
    SynthConfig c;
    c.dataset_size = 1000;
    c.seed = 12;
    const auto d = generate(c);
    std::ostringstream first;
    write_graph_db(first, d.db);
    const auto back = parse(first.str());
    REQUIRE(back.graphs.size() == 1000);
    std::ostringstream second;
    write_graph_db(second, back);
    CHECK(first.str() == second.str());
}

TEST_CASE("clustering files") {
    Clustering empty;
    std::ostringstream e;
    write_clustering(e, empty);
    CHECK(e.str() == "graph_id\tcluster_id\n");

    Clustering one;
    one.clusters.push_back({0, {0, 1}, {}, 0});
    std::ostringstream o;
    write_clustering(o, one);
    CHECK(o.str() == "graph_id\tcluster_id\n0\t0\n1\t0\n");

    Clustering mixed;
    mixed.clusters.push_back({4, {1, 3}, {}, 0});
    mixed.clusters.push_back({2, {0}, {}, 0});
    mixed.noise.members = {2, 5};
    std::ostringstream m;
    write_clustering(m, mixed);
    std::istringstream in(m.str());
    const auto back = read_label_vector(in);
    CHECK(back == to_label_vector(mixed));
    CHECK(back.at(5) == kNoiseClusterId);
    CHECK(back.at(3) == 4);
}

TEST_CASE("label vector parsing errors") {
    auto bad = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_label_vector(in), IoError);
    };
    bad("");
    bad("id\tclass\n0\t1\n");
    bad("graph_id\tclass\n0\t1\n0\t2\n");
    bad("graph_id\tclass\n0\tx\n");
}

TEST_CASE("stats document keys") {
    RunStats s;
    s.iterations.push_back({10.5, 3, 7, 42, 1.5});
    s.z_history = {10.5};
    s.cluster_acov = {{0, 0.5}, {3, 0.75}};
    s.support_queries = 42;
    const auto doc = stats_json(s);
    for (const char* key : {"iterations", "z_history", "cluster_count", "noise_size", "cluster_acov",
                            "support_queries", "wall_ms", "per_iteration"})
        CHECK(doc.find(std::string("\"") + key + "\"") != std::string::npos);
    CHECK(doc.find("\"noise_size\": 7") != std::string::npos);
}
