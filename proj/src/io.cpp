#include "struclus/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace struclus {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

template <class T>
bool parse_int(std::string_view s, T& value) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw IoError("line " + std::to_string(line_no) + ": " + what);
}

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

GraphDatabase read_graph_db(std::istream& in, std::shared_ptr<LabelTable> labels) {
    GraphDatabase db;
    db.labels = labels ? std::move(labels) : std::make_shared<LabelTable>();
    LabeledGraph* current = nullptr;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "t") {
            long long id = 0;
            if (tok.size() != 3 || tok[1] != "#" || !parse_int(tok[2], id)) fail(line_no, "expected 't # <id>'");
            if (id == -1) break;
            db.graphs.emplace_back();
            current = &db.graphs.back();
        } else if (tok[0] == "v") {
            if (!current) fail(line_no, "vertex before any 't' line");
            std::size_t idx = 0;
            if (tok.size() != 3 || !parse_int(tok[1], idx)) fail(line_no, "expected 'v <index> <label>'");
            if (idx != current->vertex_count())
                fail(line_no, "vertex index " + std::to_string(idx) + " out of sequence");
            current->add_vertex(db.labels->intern(tok[2]));
        } else if (tok[0] == "e") {
            if (!current) fail(line_no, "edge before any 't' line");
            VertexId u = 0, v = 0;
            if (tok.size() != 4 || !parse_int(tok[1], u) || !parse_int(tok[2], v))
                fail(line_no, "expected 'e <u> <v> <label>'");
            if (u >= current->vertex_count() || v >= current->vertex_count())
                fail(line_no, "edge endpoint refers to an undeclared vertex");
            try {
                current->add_edge(u, v, db.labels->intern(tok[3]));
            } catch (const std::invalid_argument& e) {
                fail(line_no, e.what());
            }
        } else {
            fail(line_no, "unknown record '" + std::string(tok[0]) + "'");
        }
    }
    if (in.bad()) throw IoError("read error");
    return db;
}

GraphDatabase read_graph_db(const std::filesystem::path& path, std::shared_ptr<LabelTable> labels) {
    auto in = open_in(path);
    try {
        return read_graph_db(in, std::move(labels));
    } catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void write_graph(std::ostream& out, const LabeledGraph& g, const LabelTable& labels, std::size_t id) {
    out << "t # " << id << '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "v " << v << ' ' << labels.name(g.vertex_label(v)) << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << labels.name(e.label) << '\n';
}

void write_graph_db(std::ostream& out, const GraphDatabase& db) {
    for (std::size_t i = 0; i < db.graphs.size(); ++i) write_graph(out, db.graphs[i], *db.labels, i);
}

void write_graph_db(const std::filesystem::path& path, const GraphDatabase& db) {
    auto out = open_out(path);
    write_graph_db(out, db);
    finish(out, path);
}

void write_label_vector(std::ostream& out, const LabelVector& labels, const std::string& value_column) {
    out << "graph_id\t" << value_column << '\n';
    for (const auto& [id, value] : labels) out << id << '\t' << value << '\n';
}

void write_label_vector(const std::filesystem::path& path, const LabelVector& labels,
                        const std::string& value_column) {
    auto out = open_out(path);
    write_label_vector(out, labels, value_column);
    finish(out, path);
}

LabelVector read_label_vector(std::istream& in) {
    LabelVector out;
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (!header) {
            if (tok.size() != 2 || tok[0] != "graph_id") fail(line_no, "expected header 'graph_id<TAB><column>'");
            header = true;
            continue;
        }
        std::uint64_t id = 0;
        std::int64_t value = 0;
        if (tok.size() != 2 || !parse_int(tok[0], id) || !parse_int(tok[1], value))
            fail(line_no, "expected '<graph_id><TAB><integer>'");
        if (!out.emplace(id, value).second) fail(line_no, "duplicate graph id " + std::to_string(id));
    }
    if (!header) throw IoError("missing header line");
    return out;
}

LabelVector read_label_vector(const std::filesystem::path& path) {
    auto in = open_in(path);
    try {
        return read_label_vector(in);
    } catch (const IoError& e) {
        throw IoError(path.string() + ": " + e.what());
    }
}

void write_clustering(std::ostream& out, const Clustering& clustering) {
    write_label_vector(out, to_label_vector(clustering), "cluster_id");
}

void write_clustering(const std::filesystem::path& path, const Clustering& clustering) {
    write_label_vector(path, to_label_vector(clustering), "cluster_id");
}

std::string stats_json(const RunStats& stats, int indent) {
    nlohmann::ordered_json j;
    j["iterations"] = stats.iterations.size();
    j["converged"] = stats.converged;
    j["z_history"] = stats.z_history;
    j["cluster_count"] = stats.cluster_acov.size();
    j["noise_size"] = stats.iterations.empty() ? 0 : stats.iterations.back().noise_size;
    auto& acov = j["cluster_acov"] = nlohmann::ordered_json::array();
    for (const auto& [id, a] : stats.cluster_acov) acov.push_back({{"cluster_id", id}, {"acov", a}});
    j["support_queries"] = stats.support_queries;
    j["wall_ms"] = stats.wall_ms;
    auto& per = j["per_iteration"] = nlohmann::ordered_json::array();
    for (const auto& it : stats.iterations)
        per.push_back({{"z", it.z},
                       {"cluster_count", it.cluster_count},
                       {"noise_size", it.noise_size},
                       {"support_queries", it.support_queries},
                       {"wall_ms", it.wall_ms}});
    return j.dump(indent);
}

void write_stats(const std::filesystem::path& path, const RunStats& stats) {
    auto out = open_out(path);
    out << stats_json(stats) << '\n';
    finish(out, path);
}

}  // namespace struclus
