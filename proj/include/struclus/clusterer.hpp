#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "struclus/eval.hpp"
#include "struclus/fingerprint.hpp"
#include "struclus/graph.hpp"
#include "struclus/isomorphism.hpp"
#include "struclus/miner.hpp"
#include "struclus/parallel.hpp"

namespace struclus {

struct StruClusConfig {
    /// Overall error bound for stochastic support counting per mined pattern.
    double alpha_total = 0.5;
    std::size_t candidates_per_cluster = 25;
    /// Sampling batches allowed to collect candidates_per_cluster distinct patterns.
    std::size_t candidate_batches = 4;
    // Dynamic minimum support: relative coverage lr maps to ls, hr to hs.
    double ls = 0.4;
    double lr = 0.0;
    double hs = 0.99;
    double hr = 0.9;
    double split_threshold = 0.6;
    /// Compare split_threshold against aCov instead of relCov.
    bool split_on_absolute_coverage = false;
    double sim_min = 0.3;
    std::size_t sim_num = 3;
    std::size_t reps_max = 3;
    /// Exponent on the cluster count in the objective.
    double granularity_exponent = 1.0;
    double beta = 0.01;
    std::size_t window_w = 3;
    std::size_t stride_s = 3;
    std::size_t min_sample = 30;
    double pre_min_sup = 0.01;
    std::size_t pre_cluster_rounds = 10;
    std::size_t max_iterations = 100;
    std::uint64_t seed = 1;
    /// 0 = all hardware threads.
    unsigned threads = 1;
    bool exact_support = false;
    FingerprintConfig fingerprint;

    /// Throws std::invalid_argument on inconsistent settings.
    void validate() const;
    MinerOptions miner_options() const { return {min_sample, alpha_total, exact_support, candidate_batches}; }
};

/// Dataset graphs with their precomputed sizes and fingerprints.
class Dataset {
public:
    Dataset(GraphDatabase db, const FingerprintConfig& fp_cfg = {}, const Executor& executor = Executor{1});

    std::size_t size() const noexcept { return db_.graphs.size(); }
    const LabeledGraph& graph(GraphId id) const { return db_.graphs[id]; }
    const Fingerprint& fingerprint(GraphId id) const { return fingerprints_[id]; }
    std::size_t graph_size(GraphId id) const { return sizes_[id]; }
    const GraphDatabase& database() const noexcept { return db_; }
    const FingerprintConfig& fingerprint_config() const noexcept { return fp_cfg_; }

private:
    GraphDatabase db_;
    FingerprintConfig fp_cfg_;
    std::vector<Fingerprint> fingerprints_;
    std::vector<std::size_t> sizes_;
};

struct Representative {
    LabeledGraph graph;
    Fingerprint fingerprint;
    std::size_t size = 0;
    /// Unique within a run; keys the pairwise similarity cache.
    std::uint64_t uid = 0;
};

Representative make_representative(LabeledGraph g, const FingerprintConfig& cfg, std::uint64_t uid);

struct Cluster {
    std::uint64_t id = 0;
    std::vector<GraphId> members;  // ascending
    std::vector<Representative> representatives;
    std::size_t sum_member_sizes = 0;
};

struct Clustering {
    std::vector<Cluster> clusters;
    /// Graphs supported by no representative. Carries no representatives.
    Cluster noise;
};

inline constexpr std::int64_t kNoiseClusterId = -1;

struct CoverageScores {
    std::vector<double> acov;    // per regular cluster, same order as clusters
    std::vector<double> relcov;  // 0 if every cluster has aCov 0
};

/// aCov = mean representative size / mean member size (0 without
/// representatives or members); relCov = aCov / mean aCov over regular clusters.
CoverageScores coverage_scores(const Clustering& clustering);

double dynamic_min_sup(double relcov, const StruClusConfig& cfg);

/// (|C_R| |R| / sum_{G in C_R} |G|) * (sup(R, C) - sup(R, X)), where C_R are
/// the members of `cluster` containing R. 0 when C_R is empty.
double rank_representative(const LabeledGraph& rep, const Cluster& cluster, const Dataset& dataset);

/// Sum of |R|^2 over representatives contained in g. The fingerprint check
/// only skips isomorphism tests it proves unnecessary.
std::size_t cluster_similarity(const LabeledGraph& g, const Fingerprint& g_fp, const Cluster& cluster,
                               bool use_prefilter = true);

/// sim(R, R') = mcs / max(|R|, |R'|) >= sim_min, decided with an early-exit MCS.
bool representatives_similar(const LabeledGraph& a, const LabeledGraph& b, double sim_min);

/// sum |C| aCov(C) / |clusters|^exponent over regular clusters.
double objective(const Clustering& clustering, const StruClusConfig& cfg);

/// True once at least s + w values exist and the last w sum to at most
/// (1 + beta) times the w values ending s iterations earlier.
bool converged(const std::vector<double>& history, const StruClusConfig& cfg);

/// Violations of the partition property, cached sums, representative limits
/// and, if `check_support`, of "every regular member contains a representative".
std::vector<std::string> audit(const Clustering& clustering, const Dataset& dataset, const StruClusConfig& cfg,
                               bool check_support);

LabelVector to_label_vector(const Clustering& clustering);

struct IterationStats {
    double z = 0;
    std::size_t cluster_count = 0;
    std::size_t noise_size = 0;
    std::size_t support_queries = 0;
    double wall_ms = 0;
};

struct RunStats {
    std::vector<IterationStats> iterations;
    std::vector<double> z_history;
    std::vector<std::pair<std::uint64_t, double>> cluster_acov;  // final (cluster id, aCov)
    std::size_t support_queries = 0;
    double wall_ms = 0;
    bool converged = false;
};

/// Called at each phase boundary with the phase name ("pre_cluster", "split",
/// "merge", "update", "assign").
using PhaseObserver = std::function<void(std::string_view phase, const Clustering&)>;

/// Runs the clustering loop and its phases against one dataset. Phases are
/// sequential; the work inside each phase is spread over the executor.
class Clusterer {
public:
    Clusterer(const Dataset& dataset, StruClusConfig cfg);

    Clustering run(RunStats* stats = nullptr, const PhaseObserver& observer = {});

    /// Clusters over `pool` from pairwise dissimilar mined patterns, each the
    /// single representative of one new cluster, followed by assignment
    /// restricted to the pool. Unassigned pool graphs are returned in `leftover`.
    std::vector<Cluster> pre_cluster(const std::vector<GraphId>& pool, std::vector<GraphId>& leftover);

    void split_clusters(Clustering& clustering);
    void merge_clusters(Clustering& clustering);
    void update_representatives(Clustering& clustering);
    void assign_all(Clustering& clustering);

    void set_iteration(std::size_t iteration) noexcept { iteration_ = iteration; }
    std::size_t support_queries() const noexcept { return mining_stats_.support_queries; }
    const StruClusConfig& config() const noexcept { return cfg_; }

private:
    std::uint64_t next_uid() { return next_uid_++; }
    std::vector<long> best_clusters(const std::vector<GraphId>& ids, const std::vector<Cluster>& clusters) const;
    void rebuild_members(Cluster& c) const;
    /// Keeps the reps_max best ranked representatives of oversized clusters.
    void trim_representatives(std::vector<Cluster>& clusters) const;

    const Dataset& dataset_;
    StruClusConfig cfg_;
    Executor executor_;
    MiningStats mining_stats_;
    std::size_t iteration_ = 0;
    std::uint64_t next_cluster_id_ = 0;
    std::uint64_t next_uid_ = 0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, bool> similarity_cache_;
};

}  // namespace struclus
