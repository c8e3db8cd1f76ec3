#include "struclus/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace struclus {

// ---------------------------------------------------------------------------
// Subgraph isomorphism

SubgraphMatcher::SubgraphMatcher(const LabeledGraph& pattern) : pattern_(&pattern) {
    const std::size_t n = pattern.vertex_count();
    std::vector<std::size_t> position(n, npos);
    std::vector<std::size_t> links(n, 0);  // connections to already ordered vertices
    steps_.reserve(n);

    while (steps_.size() < n) {
        // Prefer vertices linked to the ordered prefix, then high degree.
        std::size_t pick = npos;
        for (VertexId v = 0; v < n; ++v) {
            if (position[v] != npos) continue;
            if (pick == npos || links[v] > links[pick] ||
                (links[v] == links[pick] && pattern.degree(v) > pattern.degree(pick)))
                pick = v;
        }
        const auto v = static_cast<VertexId>(pick);
        Step step{v, pattern.vertex_label(v), pattern.degree(v), npos, 0, {}};
        for (const auto& nb : pattern.neighbors(v)) {
            const std::size_t p = position[nb.vertex];
            if (p == npos) continue;
            if (step.parent == npos || p < step.parent) {
                if (step.parent != npos) step.back_edges.push_back({step.parent, step.parent_edge_label});
                step.parent = p;
                step.parent_edge_label = nb.label;
            } else {
                step.back_edges.push_back({p, nb.label});
            }
        }
        position[v] = steps_.size();
        steps_.push_back(std::move(step));
        for (const auto& nb : pattern.neighbors(v)) ++links[nb.vertex];
    }

    std::map<LabelId, std::size_t> counts;
    for (LabelId l : pattern.vertex_labels()) ++counts[l];
    label_counts_.assign(counts.begin(), counts.end());
}

bool SubgraphMatcher::label_counts_fit(const LabeledGraph& target) const {
    for (const auto& [label, needed] : label_counts_) {
        std::size_t have = 0;
        for (LabelId l : target.vertex_labels())
            if (l == label && ++have >= needed) break;
        if (have < needed) return false;
    }
    return true;
}

bool SubgraphMatcher::matches(const LabeledGraph& target) const {
    if (steps_.empty()) return true;
    if (pattern_->vertex_count() > target.vertex_count() ||
        pattern_->edge_count() > target.edge_count())
        return false;
    if (!label_counts_fit(target)) return false;
    std::vector<VertexId> image(steps_.size());
    std::vector<char> used(target.vertex_count(), 0);
    return extend(target, 0, image, used);
}

bool SubgraphMatcher::try_candidate(const LabeledGraph& target, std::size_t depth,
                                    VertexId candidate, std::vector<VertexId>& image,
                                    std::vector<char>& used) const {
    const Step& step = steps_[depth];
    if (used[candidate] || target.vertex_label(candidate) != step.label ||
        target.degree(candidate) < step.degree)
        return false;
    for (const auto& be : step.back_edges) {
        const auto label = target.edge_label(candidate, image[be.position]);
        if (!label || *label != be.label) return false;
    }
    image[depth] = candidate;
    used[candidate] = 1;
    if (extend(target, depth + 1, image, used)) return true;
    used[candidate] = 0;
    return false;
}

bool SubgraphMatcher::extend(const LabeledGraph& target, std::size_t depth,
                             std::vector<VertexId>& image, std::vector<char>& used) const {
    if (depth == steps_.size()) return true;
    const Step& step = steps_[depth];
    if (step.parent != npos) {
        for (const auto& nb : target.neighbors(image[step.parent])) {
            if (nb.label != step.parent_edge_label) continue;
            if (try_candidate(target, depth, nb.vertex, image, used)) return true;
        }
        return false;
    }
    for (VertexId c = 0; c < target.vertex_count(); ++c)
        if (try_candidate(target, depth, c, image, used)) return true;
    return false;
}

bool is_subgraph_iso(const LabeledGraph& pattern, const LabeledGraph& target) {
    return SubgraphMatcher(pattern).matches(target);
}

bool are_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
           is_subgraph_iso(a, b);
}

// ---------------------------------------------------------------------------
// Maximum common connected subgraph

namespace {

std::uint64_t edge_type(LabelId a, LabelId e, LabelId b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t{a} << 42) ^ (std::uint64_t{e} << 21) ^ std::uint64_t{b};
}

// Branch and bound over partial injective label-preserving maps that stay
// connected through preserved edges. A node picks an unmapped g-vertex u with
// candidates adjacent (via a label-matching edge) to the current image and
// branches on each candidate, plus one branch forbidding all of them for u.
// Forbidden pairs are never re-offered in that subtree, but u stays eligible
// for images that become reachable later, so the search is complete.
class McsSearch {
public:
    McsSearch(const LabeledGraph& g, const LabeledGraph& h, std::size_t target)
        : g_(g), h_(h), target_(target), ng_(g.vertex_count()), nh_(h.vertex_count()),
          map_g_(ng_, kNone), map_h_(nh_, kNone), forbidden_(ng_ * nh_, 0), stamp_(nh_, 0) {
        LabelId max_label = 0;
        for (LabelId l : g.vertex_labels()) max_label = std::max(max_label, l);
        for (LabelId l : h.vertex_labels()) max_label = std::max(max_label, l);
        label_slots_ = max_label + 1;

        std::map<std::uint64_t, std::size_t> types;
        for (const auto& e : g.edges()) {
            const auto t = edge_type(g.vertex_label(e.u), e.label, g.vertex_label(e.v));
            types.try_emplace(t, types.size());
        }
        for (const auto& e : g.edges())
            g_edge_type_.push_back(types.at(edge_type(g.vertex_label(e.u), e.label, g.vertex_label(e.v))));
        for (const auto& e : h.edges()) {
            auto it = types.find(edge_type(h.vertex_label(e.u), e.label, h.vertex_label(e.v)));
            h_edge_type_.push_back(it == types.end() ? kNoType : it->second);
        }
        type_slots_ = types.size();
    }

    std::size_t run() {
        search();
        return best_;
    }

private:
    static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();
    static constexpr std::size_t kNoType = std::numeric_limits<std::size_t>::max();

    bool forbidden(VertexId u, VertexId x) const { return forbidden_[u * nh_ + x] != 0; }

    // Smallest size worth searching for: an improvement, and in threshold mode
    // nothing below the target either.
    std::size_t need() const {
        return target_ == std::numeric_limits<std::size_t>::max() ? best_ + 1 : std::max(best_ + 1, target_);
    }

    void candidates(VertexId u, std::vector<VertexId>& out) {
        out.clear();
        ++stamp_value_;
        const LabelId lu = g_.vertex_label(u);
        if (mapped_ == 0) {
            for (VertexId x = 0; x < nh_; ++x)
                if (h_.vertex_label(x) == lu && !forbidden(u, x)) out.push_back(x);
            return;
        }
        for (const auto& nb : g_.neighbors(u)) {
            const VertexId image = map_g_[nb.vertex];
            if (image == kNone) continue;
            for (const auto& hn : h_.neighbors(image)) {
                const VertexId x = hn.vertex;
                if (hn.label != nb.label || map_h_[x] != kNone || h_.vertex_label(x) != lu ||
                    forbidden(u, x) || stamp_[x] == stamp_value_)
                    continue;
                stamp_[x] = stamp_value_;
                out.push_back(x);
            }
        }
    }

    // current + optimistic gain from vertices still reachable in g and label
    // multiset overlap of the remaining vertices and edges.
    std::size_t bound() {
        std::vector<char> alive(ng_, 0);
        for (VertexId u = 0; u < ng_; ++u) {
            if (map_g_[u] != kNone) continue;
            for (VertexId x = 0; x < nh_; ++x) {
                if (map_h_[x] == kNone && h_.vertex_label(x) == g_.vertex_label(u) && !forbidden(u, x)) {
                    alive[u] = 1;
                    break;
                }
            }
        }
        if (mapped_ > 0) {
            std::vector<char> reach(ng_, 0);
            std::vector<VertexId> stack;
            for (VertexId u = 0; u < ng_; ++u)
                if (map_g_[u] != kNone) stack.push_back(u);
            while (!stack.empty()) {
                const VertexId u = stack.back();
                stack.pop_back();
                for (const auto& nb : g_.neighbors(u)) {
                    if (alive[nb.vertex] && !reach[nb.vertex]) {
                        reach[nb.vertex] = 1;
                        stack.push_back(nb.vertex);
                    }
                }
            }
            alive.swap(reach);
        }

        std::vector<std::size_t> g_labels(label_slots_, 0), h_labels(label_slots_, 0);
        for (VertexId u = 0; u < ng_; ++u)
            if (alive[u]) ++g_labels[g_.vertex_label(u)];
        for (VertexId x = 0; x < nh_; ++x)
            if (map_h_[x] == kNone) ++h_labels[h_.vertex_label(x)];
        std::size_t gain = 0;
        for (std::size_t l = 0; l < label_slots_; ++l) gain += std::min(g_labels[l], h_labels[l]);

        std::vector<std::size_t> g_types(type_slots_, 0), h_types(type_slots_, 0);
        const auto& ge = g_.edges();
        for (std::size_t i = 0; i < ge.size(); ++i) {
            const bool mu = map_g_[ge[i].u] != kNone, mv = map_g_[ge[i].v] != kNone;
            if (mu && mv) continue;
            if ((mu || alive[ge[i].u]) && (mv || alive[ge[i].v])) ++g_types[g_edge_type_[i]];
        }
        const auto& he = h_.edges();
        for (std::size_t i = 0; i < he.size(); ++i) {
            if (h_edge_type_[i] == kNoType) continue;
            if (map_h_[he[i].u] != kNone && map_h_[he[i].v] != kNone) continue;
            ++h_types[h_edge_type_[i]];
        }
        for (std::size_t t = 0; t < type_slots_; ++t) gain += std::min(g_types[t], h_types[t]);
        return current_ + gain;
    }

    std::size_t preserved_edges(VertexId u, VertexId x) const {
        std::size_t count = 0;
        for (const auto& nb : g_.neighbors(u)) {
            const VertexId image = map_g_[nb.vertex];
            if (image == kNone) continue;
            const auto label = h_.edge_label(image, x);
            if (label && *label == nb.label) ++count;
        }
        return count;
    }

    void search() {
        if (done_) return;
        if (current_ > best_) best_ = current_;
        if (best_ >= target_) {
            done_ = true;
            return;
        }
        if (bound() < need()) return;

        // Fail-first: the vertex with the fewest candidates.
        VertexId pick = kNone;
        std::vector<VertexId> pick_cands, scratch;
        for (VertexId u = 0; u < ng_; ++u) {
            if (map_g_[u] != kNone) continue;
            candidates(u, scratch);
            if (scratch.empty()) continue;
            if (pick == kNone || scratch.size() < pick_cands.size()) {
                pick = u;
                pick_cands = scratch;
                if (pick_cands.size() == 1) break;
            }
        }
        if (pick == kNone) return;

        for (VertexId x : pick_cands) {
            const std::size_t gain = 1 + preserved_edges(pick, x);
            map_g_[pick] = x;
            map_h_[x] = pick;
            ++mapped_;
            current_ += gain;
            search();
            current_ -= gain;
            --mapped_;
            map_h_[x] = kNone;
            map_g_[pick] = kNone;
            if (done_) return;
        }

        for (VertexId x : pick_cands) forbidden_[pick * nh_ + x] = 1;
        search();
        for (VertexId x : pick_cands) forbidden_[pick * nh_ + x] = 0;
    }

    const LabeledGraph& g_;
    const LabeledGraph& h_;
    std::size_t target_;
    std::size_t ng_, nh_;
    std::vector<VertexId> map_g_, map_h_;
    std::vector<char> forbidden_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t stamp_value_ = 0;
    std::vector<std::size_t> g_edge_type_, h_edge_type_;
    std::size_t label_slots_ = 0, type_slots_ = 0;
    std::size_t mapped_ = 0, current_ = 0, best_ = 0;
    bool done_ = false;
};

}  // namespace

GraphSize mcs_upper_bound(const LabeledGraph& g, const LabeledGraph& h) {
    std::map<LabelId, std::pair<std::size_t, std::size_t>> labels;
    for (LabelId l : g.vertex_labels()) ++labels[l].first;
    for (LabelId l : h.vertex_labels()) ++labels[l].second;
    std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> types;
    for (const auto& e : g.edges()) ++types[edge_type(g.vertex_label(e.u), e.label, g.vertex_label(e.v))].first;
    for (const auto& e : h.edges()) ++types[edge_type(h.vertex_label(e.u), e.label, h.vertex_label(e.v))].second;
    std::size_t vertices = 0, edges = 0;
    for (const auto& [_, c] : labels) vertices += std::min(c.first, c.second);
    for (const auto& [_, c] : types) edges += std::min(c.first, c.second);
    // A connected subgraph on k vertices has at most k(k-1)/2 edges and, when
    // it has an edge at all, at least two vertices.
    if (vertices == 0) return {0};
    edges = std::min(edges, vertices * (vertices - 1) / 2);
    return {vertices + edges};
}

GraphSize mcs_size(const LabeledGraph& g, const LabeledGraph& h, std::optional<GraphSize> lower_bound) {
    const GraphSize ub = mcs_upper_bound(g, h);
    if (ub.value == 0) return {0};
    if (lower_bound && ub < *lower_bound) return ub;
    const std::size_t target =
        lower_bound ? std::max<std::size_t>(lower_bound->value, 1) : std::numeric_limits<std::size_t>::max();
    const bool swap = g.vertex_count() > h.vertex_count();
    McsSearch search(swap ? h : g, swap ? g : h, target);
    return {search.run()};
}

}  // namespace struclus
