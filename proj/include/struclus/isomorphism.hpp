#pragma once

#include <optional>
#include <vector>

#include "struclus/graph.hpp"

namespace struclus {

/// Label-preserving, non-induced subgraph isomorphism test for one fixed
/// pattern against many targets. The search order is computed once: vertices
/// are visited so that each one after the first of its component has an
/// already matched neighbour, which restricts candidates to the neighbourhood
/// of that neighbour's image.
class SubgraphMatcher {
public:
    explicit SubgraphMatcher(const LabeledGraph& pattern);

    bool matches(const LabeledGraph& target) const;
    const LabeledGraph& pattern() const noexcept { return *pattern_; }

private:
    struct BackEdge {
        std::size_t position;
        LabelId label;
    };
    struct Step {
        VertexId vertex;
        LabelId label;
        std::size_t degree;
        // Position of the matched neighbour whose image seeds the candidates;
        // npos for the first vertex of each component.
        std::size_t parent;
        LabelId parent_edge_label;
        std::vector<BackEdge> back_edges;
    };
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool label_counts_fit(const LabeledGraph& target) const;
    bool extend(const LabeledGraph& target, std::size_t depth, std::vector<VertexId>& image,
                std::vector<char>& used) const;
    bool try_candidate(const LabeledGraph& target, std::size_t depth, VertexId candidate,
                       std::vector<VertexId>& image, std::vector<char>& used) const;

    const LabeledGraph* pattern_;
    std::vector<Step> steps_;
    std::vector<std::pair<LabelId, std::size_t>> label_counts_;
};

/// True iff `pattern` is subgraph isomorphic to `target`. The empty pattern is
/// contained in every graph.
bool is_subgraph_iso(const LabeledGraph& pattern, const LabeledGraph& target);

bool are_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

/// Size (|V|+|E|) of a maximum common connected, non-induced subgraph.
///
/// With `lower_bound` set the search stops as soon as a common subgraph of at
/// least that size is found and returns its size; if none exists the result is
/// some value below the bound. Callers in that mode may only compare the
/// result against the bound.
GraphSize mcs_size(const LabeledGraph& g, const LabeledGraph& h,
                   std::optional<GraphSize> lower_bound = std::nullopt);

/// Upper bound on mcs_size from vertex-label and edge-type multiset overlap.
GraphSize mcs_upper_bound(const LabeledGraph& g, const LabeledGraph& h);

}  // namespace struclus
