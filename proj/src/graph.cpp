#include "struclus/graph.hpp"

#include <stdexcept>

namespace struclus {

LabelId LabelTable::intern(std::string_view name) {
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    const auto id = static_cast<LabelId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

std::optional<LabelId> LabelTable::find(std::string_view name) const {
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    return std::nullopt;
}

const std::string& LabelTable::name(LabelId id) const {
    if (id >= names_.size()) throw std::out_of_range("unknown label id " + std::to_string(id));
    return names_[id];
}

VertexId LabeledGraph::add_vertex(LabelId label) {
    vertex_labels_.push_back(label);
    adjacency_.emplace_back();
    return static_cast<VertexId>(vertex_labels_.size() - 1);
}

void LabeledGraph::add_edge(VertexId u, VertexId v, LabelId label) {
    if (u == v) throw std::invalid_argument("self loop on vertex " + std::to_string(u));
    if (u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v, label});
    adjacency_[u].push_back({v, label});
    adjacency_[v].push_back({u, label});
}

std::optional<LabelId> LabeledGraph::edge_label(VertexId u, VertexId v) const {
    const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const VertexId other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    for (const auto& n : a)
        if (n.vertex == other) return n.label;
    return std::nullopt;
}

bool LabeledGraph::is_connected() const {
    if (vertex_count() <= 1) return true;
    std::vector<char> seen(vertex_count(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (const auto& n : adjacency_[v]) {
            if (!seen[n.vertex]) {
                seen[n.vertex] = 1;
                ++reached;
                stack.push_back(n.vertex);
            }
        }
    }
    return reached == vertex_count();
}

GraphSize size(const LabeledGraph& g) noexcept { return {g.vertex_count() + g.edge_count()}; }

}  // namespace struclus
