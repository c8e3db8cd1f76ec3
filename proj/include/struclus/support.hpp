#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "struclus/graph.hpp"
#include "struclus/rng.hpp"

namespace struclus {

/// Graphs a support value is measured over. Holds pointers so that cluster
/// member subsets can be viewed without copying.
using CorpusView = std::span<const LabeledGraph* const>;

std::vector<const LabeledGraph*> make_corpus(std::span<const LabeledGraph> graphs);

enum class Verdict { BelowThreshold, AtOrAbove };

struct SupportDecision {
    Verdict verdict = Verdict::BelowThreshold;
    double estimate = 0.0;
    std::size_t sample_size = 0;
    bool exact = false;
    /// Binomial tests performed (0 when the corpus was scanned outright).
    std::size_t tests = 0;

    bool frequent() const noexcept { return verdict == Verdict::AtOrAbove; }
};

struct TestBudget {
    std::size_t max_tests = 1;
    double corrected_alpha = 0.5;
};

/// True iff count / total >= min_sup, tolerant to rounding of min_sup * total.
bool meets_support(std::size_t count, std::size_t total, double min_sup) noexcept;

/// Fraction of corpus graphs containing `pattern`. Throws on an empty corpus.
double exact_support(const LabeledGraph& pattern, CorpusView corpus);

/// Bonferroni budget: ceil(log2(corpus/min_sample)) * (vmax^2 + vmax) * paths,
/// clamped to at least one test.
TestBudget test_budget(std::size_t corpus_size, std::size_t min_sample, std::size_t vmax,
                       std::size_t num_freq_paths, double alpha_total);

/// Vertex count of the smallest graph among the ceil(min_sup * N) largest,
/// i.e. the (1 - min_sup)-quantile of ascending vertex counts.
std::size_t quantile_vertex_count(CorpusView corpus, double min_sup);

/// log P[X <= k] and log P[X >= k] for X ~ Binomial(n, p), summed exactly.
double log_binomial_cdf(std::size_t k, std::size_t n, double p);
double log_binomial_sf(std::size_t k, std::size_t n, double p);

/// Sequential support decision over `corpus_size` items where `contains(i)`
/// reports whether item i supports the pattern. Starts from a uniform sample
/// without replacement of min_sample items and doubles it until a one-sided
/// binomial test rejects at budget.corrected_alpha or the whole corpus is
/// covered, in which case the verdict is exact.
SupportDecision decide_support(std::size_t corpus_size, double min_sup, const TestBudget& budget,
                               Rng& rng, std::size_t min_sample,
                               const std::function<bool(std::size_t)>& contains);

SupportDecision estimate_support(const LabeledGraph& pattern, CorpusView corpus, double min_sup,
                                 const TestBudget& budget, Rng& rng, std::size_t min_sample = 30);

}  // namespace struclus
