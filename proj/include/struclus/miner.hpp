#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "struclus/graph.hpp"
#include "struclus/parallel.hpp"
#include "struclus/rng.hpp"
#include "struclus/support.hpp"

namespace struclus {

/// One-edge pattern (a, edge, b) with a <= b.
struct PathType {
    LabelId a;
    LabelId edge;
    LabelId b;
    auto operator<=>(const PathType&) const = default;
};

PathType make_path_type(LabelId a, LabelId edge, LabelId b);

/// Frequent vertex labels and frequent one-edge patterns of a corpus.
struct SeedSets {
    std::vector<LabelId> freq_vertices;
    std::vector<PathType> freq_paths;
};

struct MinerOptions {
    std::size_t min_sample = 30;
    double alpha_total = 0.5;
    /// Scan the whole corpus for every support query instead of sampling.
    bool exact = false;
    /// sample_candidates keeps sampling in batches of `count` runs until it
    /// has `count` distinct patterns, at most this many batches.
    std::size_t max_batches = 1;
};

/// Counters shared by concurrent mining runs.
struct MiningStats {
    std::atomic<std::size_t> support_queries{0};
    std::atomic<std::size_t> binomial_tests{0};
};

/// Single scan with exact per-graph presence counts.
SeedSets enumerate_seeds(CorpusView corpus, double min_sup);

/// Budget for one maximal-pattern run over `corpus`, from the vertex-count
/// quantile and the number of frequent paths.
TestBudget mining_budget(CorpusView corpus, double min_sup, const SeedSets& seeds, const MinerOptions& opts);

/// Grows a random frequent vertex by random forward and backward one-edge
/// extensions until every untried extension has been found infrequent (or the
/// binomial test budget is spent). Returns nothing if no vertex is frequent.
///
/// `tests_used` receives the number of binomial tests performed.
std::optional<LabeledGraph> sample_maximal(CorpusView corpus, double min_sup, const SeedSets& seeds,
                                           const TestBudget& budget, Rng& rng, const MinerOptions& opts,
                                           MiningStats* stats = nullptr, std::size_t* tests_used = nullptr);

/// Up to `count` pairwise non-isomorphic patterns from independent runs. Run r
/// draws from derive_rng(stream_seed, {r}); duplicates are dropped in run
/// order, so the result does not depend on the executor's thread count.
/// See MinerOptions::max_batches.
std::vector<LabeledGraph> sample_candidates(CorpusView corpus, double min_sup, std::size_t count,
                                            const MinerOptions& opts, std::uint64_t stream_seed,
                                            const Executor& executor = Executor{1},
                                            MiningStats* stats = nullptr);

}  // namespace struclus
