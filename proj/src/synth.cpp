#include "struclus/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "struclus/rng.hpp"

namespace struclus {

namespace {

class Generator {
public:
    Generator(const SynthConfig& cfg, SyntheticDataset& out) : cfg_(cfg), rng_(derive_rng(cfg.seed, {0x5e7})) {
        auto weights = [&](std::size_t n) {
            std::vector<double> w(n);
            std::exponential_distribution<double> draw(1.0);
            for (std::size_t k = 0; k < n; ++k)
                w[k] = cfg.label_weighting == LabelWeighting::Decay ? std::exp(-static_cast<double>(k)) : draw(rng_);
            return w;
        };
        const auto vw = weights(cfg.num_vertex_labels), ew = weights(cfg.num_edge_labels);
        vertex_label_ = std::discrete_distribution<std::size_t>(vw.begin(), vw.end());
        edge_label_ = std::discrete_distribution<std::size_t>(ew.begin(), ew.end());
        for (std::size_t k = 0; k < cfg.num_vertex_labels; ++k)
            vertex_ids_.push_back(out.db.labels->intern("v" + std::to_string(k)));
        for (std::size_t k = 0; k < cfg.num_edge_labels; ++k)
            edge_ids_.push_back(out.db.labels->intern("e" + std::to_string(k)));
    }

    LabelId vertex_label() { return vertex_ids_[vertex_label_(rng_)]; }
    LabelId edge_label() { return edge_ids_[edge_label_(rng_)]; }

    LabeledGraph seed() {
        std::poisson_distribution<std::size_t> count(cfg_.seed_vertex_mean);
        const std::size_t n = std::max<std::size_t>(1, count(rng_));
        LabeledGraph g;
        for (std::size_t i = 0; i < n; ++i) g.add_vertex(vertex_label());
        std::bernoulli_distribution edge(cfg_.edge_prob);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (edge(rng_)) g.add_edge(u, v, edge_label());
        connect(g);
        return g;
    }

    // Joins the parts into one graph, chaining consecutive parts with a single
    // random bridge edge.
    LabeledGraph compose(const std::vector<const LabeledGraph*>& parts) {
        LabeledGraph g;
        VertexId previous_begin = 0, previous_end = 0;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            const auto offset = static_cast<VertexId>(g.vertex_count());
            for (LabelId l : parts[p]->vertex_labels()) g.add_vertex(l);
            for (const auto& e : parts[p]->edges()) g.add_edge(e.u + offset, e.v + offset, e.label);
            const auto end = static_cast<VertexId>(g.vertex_count());
            if (p > 0) {
                std::uniform_int_distribution<VertexId> a(previous_begin, previous_end - 1), b(offset, end - 1);
                g.add_edge(a(rng_), b(rng_), edge_label());
            }
            previous_begin = offset;
            previous_end = end;
        }
        return g;
    }

    Rng& rng() { return rng_; }

private:
    // Adds random labelled edges between components until connected.
    void connect(LabeledGraph& g) {
        const std::size_t n = g.vertex_count();
        std::uniform_int_distribution<VertexId> any(0, static_cast<VertexId>(n - 1));
        while (!g.is_connected()) {
            const auto comp = components(g);
            const VertexId u = any(rng_);
            VertexId v = any(rng_);
            while (comp[v] == comp[u]) v = any(rng_);
            g.add_edge(u, v, edge_label());
        }
    }

    static std::vector<std::size_t> components(const LabeledGraph& g) {
        std::vector<std::size_t> comp(g.vertex_count(), static_cast<std::size_t>(-1));
        std::size_t next = 0;
        for (VertexId s = 0; s < g.vertex_count(); ++s) {
            if (comp[s] != static_cast<std::size_t>(-1)) continue;
            std::vector<VertexId> stack{s};
            comp[s] = next;
            while (!stack.empty()) {
                const VertexId v = stack.back();
                stack.pop_back();
                for (const auto& nb : g.neighbors(v))
                    if (comp[nb.vertex] == static_cast<std::size_t>(-1)) {
                        comp[nb.vertex] = next;
                        stack.push_back(nb.vertex);
                    }
            }
            ++next;
        }
        return comp;
    }

    const SynthConfig& cfg_;
    Rng rng_;
    std::discrete_distribution<std::size_t> vertex_label_, edge_label_;
    std::vector<LabelId> vertex_ids_, edge_ids_;
};

void validate(const SynthConfig& cfg) {
    if (cfg.num_clusters == 0 || cfg.seeds_per_cluster == 0 || cfg.num_vertex_labels == 0 ||
        cfg.num_edge_labels == 0 || cfg.noise_seed_pool == 0)
        throw std::invalid_argument("synthetic config counts must be at least 1");
    if (cfg.seed_vertex_mean <= 0) throw std::invalid_argument("seed vertex mean must be positive");
    if (cfg.edge_prob < 0 || cfg.edge_prob > 1 || cfg.noise_graph_fraction < 0 || cfg.noise_graph_fraction > 1)
        throw std::invalid_argument("synthetic config fractions must lie in [0, 1]");
}

}  // namespace

LabelVector SyntheticDataset::truth() const {
    LabelVector out;
    for (std::size_t i = 0; i < classes.size(); ++i) out.emplace_hint(out.end(), i, classes[i]);
    return out;
}

SyntheticDataset generate(const SynthConfig& cfg) {
    validate(cfg);
    SyntheticDataset out;
    Generator gen(cfg, out);

    out.cluster_seeds.resize(cfg.num_clusters);
    for (auto& seeds : out.cluster_seeds)
        for (std::size_t s = 0; s < cfg.seeds_per_cluster; ++s) seeds.push_back(gen.seed());
    for (std::size_t s = 0; s < cfg.noise_seed_pool; ++s) out.noise_seeds.push_back(gen.seed());

    Rng& rng = gen.rng();
    std::bernoulli_distribution is_noise(cfg.noise_graph_fraction);
    std::uniform_int_distribution<std::size_t> cluster(0, cfg.num_clusters - 1);
    std::uniform_int_distribution<std::size_t> pool(0, cfg.noise_seed_pool - 1);
    std::uniform_int_distribution<std::size_t> extra(0, cfg.max_noise_seeds);
    std::uniform_int_distribution<std::size_t> noise_parts(1, 3);

    out.db.graphs.reserve(cfg.dataset_size);
    out.classes.reserve(cfg.dataset_size);
    for (std::size_t i = 0; i < cfg.dataset_size; ++i) {
        std::vector<const LabeledGraph*> parts;
        std::int64_t cls = kNoiseClass;
        if (is_noise(rng)) {
            for (std::size_t k = noise_parts(rng); k > 0; --k) parts.push_back(&out.noise_seeds[pool(rng)]);
        } else {
            const std::size_t c = cluster(rng);
            cls = static_cast<std::int64_t>(c);
            for (const auto& s : out.cluster_seeds[c]) parts.push_back(&s);
            for (std::size_t k = extra(rng); k > 0; --k) parts.push_back(&out.noise_seeds[pool(rng)]);
        }
        std::shuffle(parts.begin(), parts.end(), rng);
        out.db.graphs.push_back(gen.compose(parts));
        out.classes.push_back(cls);
    }
    return out;
}

}  // namespace struclus
