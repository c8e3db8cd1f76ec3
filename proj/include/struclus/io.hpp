#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

#include "struclus/clusterer.hpp"
#include "struclus/eval.hpp"
#include "struclus/graph.hpp"

namespace struclus {

/// Malformed or unreadable input, or an unwritable output path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads transactions of the form
///
///   t # <id>
///   v <index> <label>      (indices 0, 1, ... in order)
///   e <u> <v> <label>
///
/// Graph ids are assigned by order of appearance; "t # -1" ends the input.
/// Blank lines are ignored. Labels are interned into `labels` (a new table if
/// null). Errors name the offending line.
GraphDatabase read_graph_db(std::istream& in, std::shared_ptr<LabelTable> labels = nullptr);
GraphDatabase read_graph_db(const std::filesystem::path& path, std::shared_ptr<LabelTable> labels = nullptr);

void write_graph(std::ostream& out, const LabeledGraph& g, const LabelTable& labels, std::size_t id);
void write_graph_db(std::ostream& out, const GraphDatabase& db);
void write_graph_db(const std::filesystem::path& path, const GraphDatabase& db);

/// Two-column TSV with a header line, e.g. "graph_id\tclass", rows in
/// ascending id order.
void write_label_vector(std::ostream& out, const LabelVector& labels, const std::string& value_column);
void write_label_vector(const std::filesystem::path& path, const LabelVector& labels,
                        const std::string& value_column);
/// Accepts any header whose first column is "graph_id".
LabelVector read_label_vector(std::istream& in);
LabelVector read_label_vector(const std::filesystem::path& path);

/// "graph_id\tcluster_id" with noise written as -1.
void write_clustering(std::ostream& out, const Clustering& clustering);
void write_clustering(const std::filesystem::path& path, const Clustering& clustering);

/// JSON document with iterations, z_history, cluster_count, noise_size,
/// per-cluster aCov, support_queries and wall_ms.
std::string stats_json(const RunStats& stats, int indent = 2);
void write_stats(const std::filesystem::path& path, const RunStats& stats);

}  // namespace struclus
