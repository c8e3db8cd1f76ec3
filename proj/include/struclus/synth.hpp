#pragma once

#include <cstdint>
#include <vector>

#include "struclus/eval.hpp"
#include "struclus/graph.hpp"

namespace struclus {

/// How label frequencies are set: label k gets weight e^-k (Decay), or every
/// label gets an independent Exp(1) draw (Sampled).
enum class LabelWeighting { Decay, Sampled };

struct SynthConfig {
    std::size_t num_clusters = 100;
    std::size_t seeds_per_cluster = 3;
    double seed_vertex_mean = 10.0;
    double edge_prob = 0.10;
    std::size_t num_vertex_labels = 10;
    std::size_t num_edge_labels = 3;
    std::size_t noise_seed_pool = 100;
    /// Noise seeds added to a cluster graph: uniform in [0, max_noise_seeds].
    std::size_t max_noise_seeds = 2;
    double noise_graph_fraction = 0.05;
    std::size_t dataset_size = 1000;
    LabelWeighting label_weighting = LabelWeighting::Sampled;
    std::uint64_t seed = 1;
};

/// Noise graphs carry class -1.
inline constexpr std::int64_t kNoiseClass = -1;

struct SyntheticDataset {
    GraphDatabase db;
    /// Class per graph id.
    std::vector<std::int64_t> classes;
    /// seeds[c] are the patterns embedded in every graph of class c.
    std::vector<std::vector<LabeledGraph>> cluster_seeds;
    std::vector<LabeledGraph> noise_seeds;

    LabelVector truth() const;
};

/// Ground-truth clustered dataset. Every graph of class c is the union of all
/// seeds of c and 0..max_noise_seeds pool seeds, chained into one connected
/// graph by random bridge edges; noise graphs join 1..3 pool seeds. Label
/// frequencies follow cfg.label_weighting. Throws std::invalid_argument on
/// degenerate configs.
SyntheticDataset generate(const SynthConfig& cfg);

}  // namespace struclus
