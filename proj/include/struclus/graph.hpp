#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace struclus {

using LabelId = std::uint32_t;
using VertexId = std::uint32_t;
using GraphId = std::uint32_t;

/// Interns label strings to dense ids. Vertex and edge labels share one table.
class LabelTable {
public:
    LabelId intern(std::string_view name);
    std::optional<LabelId> find(std::string_view name) const;
    const std::string& name(LabelId id) const;
    std::size_t size() const noexcept { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, LabelId> ids_;
};

/// |V(G)| + |E(G)|.
struct GraphSize {
    std::size_t value = 0;
    auto operator<=>(const GraphSize&) const = default;
};

struct Edge {
    VertexId u;
    VertexId v;
    LabelId label;
    bool operator==(const Edge&) const = default;
};

struct Neighbor {
    VertexId vertex;
    LabelId label;
};

/// Undirected simple graph with vertex and edge labels. Edges are stored with
/// u < v; adjacency lists are kept in insertion order.
class LabeledGraph {
public:
    LabeledGraph() = default;

    VertexId add_vertex(LabelId label);
    /// Throws std::invalid_argument on self loops, duplicate edges or
    /// endpoints out of range.
    void add_edge(VertexId u, VertexId v, LabelId label);

    std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return vertex_labels_.empty(); }

    LabelId vertex_label(VertexId v) const { return vertex_labels_[v]; }
    const std::vector<LabelId>& vertex_labels() const noexcept { return vertex_labels_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

    std::optional<LabelId> edge_label(VertexId u, VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const { return edge_label(u, v).has_value(); }

    bool is_connected() const;

private:
    std::vector<LabelId> vertex_labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

GraphSize size(const LabeledGraph& g) noexcept;

/// An ordered graph collection with its label table. Graph ids are positions.
struct GraphDatabase {
    std::shared_ptr<LabelTable> labels = std::make_shared<LabelTable>();
    std::vector<LabeledGraph> graphs;
};

}  // namespace struclus
