#include "struclus/support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "struclus/isomorphism.hpp"

namespace struclus {

namespace {

double log_add(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

double log_pmf(std::size_t i, std::size_t n, double p) {
    const double ni = static_cast<double>(n), ii = static_cast<double>(i);
    return std::lgamma(ni + 1) - std::lgamma(ii + 1) - std::lgamma(ni - ii + 1) + ii * std::log(p) +
           (ni - ii) * std::log1p(-p);
}

// Uniform sampling without replacement over [0, n), one index at a time.
class SparseShuffle {
public:
    explicit SparseShuffle(std::size_t n) : n_(n) {}

    std::size_t next(Rng& rng) {
        std::uniform_int_distribution<std::size_t> pick(drawn_, n_ - 1);
        const std::size_t j = pick(rng);
        const std::size_t at_j = value(j), at_i = value(drawn_);
        swapped_[j] = at_i;
        swapped_[drawn_] = at_j;
        ++drawn_;
        return at_j;
    }

private:
    std::size_t value(std::size_t i) const {
        auto it = swapped_.find(i);
        return it == swapped_.end() ? i : it->second;
    }

    std::size_t n_;
    std::size_t drawn_ = 0;
    std::unordered_map<std::size_t, std::size_t> swapped_;
};

}  // namespace

std::vector<const LabeledGraph*> make_corpus(std::span<const LabeledGraph> graphs) {
    std::vector<const LabeledGraph*> out;
    out.reserve(graphs.size());
    for (const auto& g : graphs) out.push_back(&g);
    return out;
}

bool meets_support(std::size_t count, std::size_t total, double min_sup) noexcept {
    return static_cast<double>(count) >= min_sup * static_cast<double>(total) - 1e-9;
}

double exact_support(const LabeledGraph& pattern, CorpusView corpus) {
    if (corpus.empty()) throw std::invalid_argument("support over an empty corpus");
    const SubgraphMatcher matcher(pattern);
    std::size_t hits = 0;
    for (const auto* g : corpus) hits += matcher.matches(*g) ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(corpus.size());
}

TestBudget test_budget(std::size_t corpus_size, std::size_t min_sample, std::size_t vmax,
                       std::size_t num_freq_paths, double alpha_total) {
    std::size_t doublings = 0;
    if (min_sample > 0 && corpus_size > min_sample)
        doublings = static_cast<std::size_t>(
            std::ceil(std::log2(static_cast<double>(corpus_size) / static_cast<double>(min_sample))));
    const std::size_t tests = std::max<std::size_t>(1, doublings * (vmax * vmax + vmax) * num_freq_paths);
    return {tests, alpha_total / static_cast<double>(tests)};
}

std::size_t quantile_vertex_count(CorpusView corpus, double min_sup) {
    if (corpus.empty()) return 0;
    std::vector<std::size_t> counts;
    counts.reserve(corpus.size());
    for (const auto* g : corpus) counts.push_back(g->vertex_count());
    std::sort(counts.begin(), counts.end());
    const auto n = counts.size();
    const auto supporters = static_cast<std::size_t>(std::ceil(min_sup * static_cast<double>(n) - 1e-9));
    const std::size_t index = supporters >= n ? 0 : n - std::max<std::size_t>(supporters, 1);
    return counts[index];
}

double log_binomial_cdf(std::size_t k, std::size_t n, double p) {
    if (k >= n) return 0.0;
    if (p >= 1.0) return -std::numeric_limits<double>::infinity();
    if (p <= 0.0) return 0.0;
    double acc = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= k; ++i) acc = log_add(acc, log_pmf(i, n, p));
    return std::min(acc, 0.0);
}

double log_binomial_sf(std::size_t k, std::size_t n, double p) {
    if (k == 0) return 0.0;
    if (k > n) return -std::numeric_limits<double>::infinity();
    if (p >= 1.0) return 0.0;
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    double acc = -std::numeric_limits<double>::infinity();
    for (std::size_t i = k; i <= n; ++i) acc = log_add(acc, log_pmf(i, n, p));
    return std::min(acc, 0.0);
}

SupportDecision decide_support(std::size_t corpus_size, double min_sup, const TestBudget& budget,
                               Rng& rng, std::size_t min_sample,
                               const std::function<bool(std::size_t)>& contains) {
    if (corpus_size == 0) throw std::invalid_argument("support over an empty corpus");
    if (!(min_sup > 0.0 && min_sup <= 1.0)) throw std::invalid_argument("min_sup must lie in (0, 1]");

    SupportDecision d;
    const double log_alpha = std::log(budget.corrected_alpha);
    SparseShuffle shuffle(corpus_size);
    std::size_t drawn = 0, hits = 0;
    std::size_t target = std::min(std::max<std::size_t>(min_sample, 1), corpus_size);
    for (;;) {
        if (target >= corpus_size) {
            for (; drawn < corpus_size; ++drawn) hits += contains(shuffle.next(rng)) ? 1 : 0;
            d.sample_size = corpus_size;
            d.estimate = static_cast<double>(hits) / static_cast<double>(corpus_size);
            d.exact = true;
            d.verdict = meets_support(hits, corpus_size, min_sup) ? Verdict::AtOrAbove : Verdict::BelowThreshold;
            return d;
        }
        for (; drawn < target; ++drawn) hits += contains(shuffle.next(rng)) ? 1 : 0;
        d.sample_size = drawn;
        d.estimate = static_cast<double>(hits) / static_cast<double>(drawn);
        ++d.tests;
        if (!meets_support(hits, drawn, min_sup)) {
            // H0: theta >= min_sup
            if (log_binomial_cdf(hits, drawn, min_sup) <= log_alpha) {
                d.verdict = Verdict::BelowThreshold;
                return d;
            }
        } else {
            // H0: theta < min_sup
            if (log_binomial_sf(hits, drawn, min_sup) <= log_alpha) {
                d.verdict = Verdict::AtOrAbove;
                return d;
            }
        }
        target = std::min(target * 2, corpus_size);
    }
}

SupportDecision estimate_support(const LabeledGraph& pattern, CorpusView corpus, double min_sup,
                                 const TestBudget& budget, Rng& rng, std::size_t min_sample) {
    if (corpus.empty()) throw std::invalid_argument("support over an empty corpus");
    const SubgraphMatcher matcher(pattern);
    return decide_support(corpus.size(), min_sup, budget, rng, min_sample,
                          [&](std::size_t i) { return matcher.matches(*corpus[i]); });
}

}  // namespace struclus
