#include "struclus/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace struclus {

namespace {

constexpr std::uint64_t kVertexTag = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kTreeTag = 0xc2b2ae3d27d4eb4fULL;
constexpr std::uint64_t kCycleTag = 0x165667b19e3779f9ULL;

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using FeatureSink = std::function<void(std::uint64_t)>;

// Isomorphism-invariant hash of a small labelled tree: rooted AHU-style hash
// with sorted child hashes, minimised over all roots.
class TreeHasher {
public:
    explicit TreeHasher(const LabeledGraph& g) : g_(g), local_(g.vertex_count(), kUnset) {}

    std::uint64_t hash(const std::vector<std::size_t>& edge_ids) {
        verts_.clear();
        adj_.clear();
        auto local = [&](VertexId v) {
            if (local_[v] == kUnset) {
                local_[v] = verts_.size();
                verts_.push_back(v);
                adj_.emplace_back();
            }
            return local_[v];
        };
        for (std::size_t id : edge_ids) {
            const Edge& e = g_.edges()[id];
            const std::size_t a = local(e.u), b = local(e.v);
            adj_[a].push_back({b, e.label});
            adj_[b].push_back({a, e.label});
        }
        std::uint64_t best = ~std::uint64_t{0};
        for (std::size_t r = 0; r < verts_.size(); ++r) best = std::min(best, rooted(r, kUnset));
        for (VertexId v : verts_) local_[v] = kUnset;
        return mix(kTreeTag, mix(edge_ids.size(), best));
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    std::uint64_t rooted(std::size_t v, std::size_t parent) const {
        std::vector<std::uint64_t> children;
        children.reserve(adj_[v].size());
        for (const auto& [w, label] : adj_[v])
            if (w != parent) children.push_back(mix(label, rooted(w, v)));
        std::sort(children.begin(), children.end());
        std::uint64_t h = mix(0x51ed27ULL, g_.vertex_label(verts_[v]));
        for (auto c : children) h = mix(h, c);
        return h;
    }

    const LabeledGraph& g_;
    std::vector<std::size_t> local_;
    std::vector<VertexId> verts_;
    std::vector<std::vector<std::pair<std::size_t, LabelId>>> adj_;
};

// Enumerates every connected acyclic edge subset with 1..max_edges edges
// exactly once (ESU over the line graph, pruned at cycles).
class TreeEnumerator {
public:
    TreeEnumerator(const LabeledGraph& g, std::size_t max_edges, const FeatureSink& sink)
        : g_(g), max_edges_(max_edges), sink_(sink), hasher_(g), in_tree_(g.vertex_count(), 0),
          incident_(g.vertex_count()) {
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            incident_[g.edges()[i].u].push_back(i);
            incident_[g.edges()[i].v].push_back(i);
        }
    }

    void run() {
        if (max_edges_ == 0) return;
        const auto& edges = g_.edges();
        for (std::size_t root = 0; root < edges.size(); ++root) {
            std::vector<std::size_t> ext;
            for (VertexId end : {edges[root].u, edges[root].v})
                for (std::size_t f : incident_[end])
                    if (f > root) ext.push_back(f);
            chosen_.assign(1, root);
            ++in_tree_[edges[root].u];
            ++in_tree_[edges[root].v];
            extend(ext, root);
            --in_tree_[edges[root].u];
            --in_tree_[edges[root].v];
        }
    }

private:
    void extend(std::vector<std::size_t> ext, std::size_t root) {
        sink_(hasher_.hash(chosen_));
        if (chosen_.size() == max_edges_) return;
        while (!ext.empty()) {
            const std::size_t w = ext.back();
            ext.pop_back();
            const Edge& e = g_.edges()[w];
            const bool u_in = in_tree_[e.u] > 0, v_in = in_tree_[e.v] > 0;
            if (u_in && v_in) continue;  // closes a cycle
            const VertexId fresh = u_in ? e.v : e.u;
            std::vector<std::size_t> next = ext;
            for (std::size_t f : incident_[fresh]) {
                if (f == w || f <= root) continue;
                const Edge& fe = g_.edges()[f];
                const VertexId other = fe.u == fresh ? fe.v : fe.u;
                if (in_tree_[other] == 0) next.push_back(f);
            }
            chosen_.push_back(w);
            ++in_tree_[e.u];
            ++in_tree_[e.v];
            extend(std::move(next), root);
            --in_tree_[e.u];
            --in_tree_[e.v];
            chosen_.pop_back();
        }
    }

    const LabeledGraph& g_;
    std::size_t max_edges_;
    const FeatureSink& sink_;
    TreeHasher hasher_;
    std::vector<std::size_t> in_tree_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<std::size_t> chosen_;
};

// Simple cycles of length 3..max_length. Each cycle is reported from its
// smallest vertex in the orientation whose second vertex is below the last.
class CycleEnumerator {
public:
    CycleEnumerator(const LabeledGraph& g, std::size_t max_length, const FeatureSink& sink)
        : g_(g), max_length_(max_length), sink_(sink), on_path_(g.vertex_count(), 0) {}

    void run() {
        if (max_length_ < 3) return;
        for (VertexId s = 0; s < g_.vertex_count(); ++s) {
            path_.assign(1, s);
            labels_.clear();
            on_path_[s] = 1;
            walk(s);
            on_path_[s] = 0;
        }
    }

private:
    void walk(VertexId start) {
        const VertexId last = path_.back();
        for (const auto& nb : g_.neighbors(last)) {
            if (nb.vertex == start && path_.size() >= 3 && path_[1] < last) {
                labels_.push_back(nb.label);
                emit();
                labels_.pop_back();
                continue;
            }
            if (nb.vertex <= start || on_path_[nb.vertex] || path_.size() == max_length_) continue;
            path_.push_back(nb.vertex);
            labels_.push_back(nb.label);
            on_path_[nb.vertex] = 1;
            walk(start);
            on_path_[nb.vertex] = 0;
            labels_.pop_back();
            path_.pop_back();
        }
    }

    // Lexicographically least (vertex label, edge label) sequence over all
    // rotations and both directions.
    void emit() {
        const std::size_t n = path_.size();
        std::vector<std::pair<LabelId, LabelId>> best, cand(n);
        for (int dir = 0; dir < 2; ++dir) {
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t i = 0; i < n; ++i) {
                    if (dir == 0) {
                        const std::size_t k = (r + i) % n;
                        cand[i] = {g_.vertex_label(path_[k]), labels_[k]};
                    } else {
                        const std::size_t k = (r + n - i) % n;
                        cand[i] = {g_.vertex_label(path_[k]), labels_[(k + n - 1) % n]};
                    }
                }
                if (best.empty() || cand < best) best = cand;
            }
        }
        std::uint64_t h = mix(kCycleTag, n);
        for (const auto& [vl, el] : best) h = mix(mix(h, vl), el);
        sink_(h);
    }

    const LabeledGraph& g_;
    std::size_t max_length_;
    const FeatureSink& sink_;
    std::vector<char> on_path_;
    std::vector<VertexId> path_;
    std::vector<LabelId> labels_;  // labels_[i] joins path_[i] and path_[i+1] (cyclically)
};

void enumerate_features(const LabeledGraph& g, const FingerprintConfig& cfg, const FeatureSink& sink) {
    for (LabelId l : g.vertex_labels()) sink(mix(kVertexTag, l));
    TreeEnumerator(g, cfg.max_tree_edges, sink).run();
    CycleEnumerator(g, cfg.max_cycle_length, sink).run();
}

}  // namespace

std::size_t Fingerprint::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

Fingerprint build_fingerprint(const LabeledGraph& g, const FingerprintConfig& cfg) {
    if (cfg.bits == 0) throw std::invalid_argument("fingerprint length must be positive");
    Fingerprint fp(cfg.bits);
    const FeatureSink sink = [&](std::uint64_t h) { fp.set(h % cfg.bits); };
    enumerate_features(g, cfg, sink);
    return fp;
}

std::vector<std::uint64_t> fingerprint_features(const LabeledGraph& g, const FingerprintConfig& cfg) {
    std::vector<std::uint64_t> out;
    const FeatureSink sink = [&](std::uint64_t h) { out.push_back(h); };
    enumerate_features(g, cfg, sink);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool filter_pass(const Fingerprint& pattern, const Fingerprint& target) {
    if (pattern.length() != target.length())
        throw std::invalid_argument("fingerprint length mismatch");
    const auto& p = pattern.words();
    const auto& t = target.words();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] & ~t[i]) return false;
    return true;
}

}  // namespace struclus
