#include "struclus/miner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "struclus/isomorphism.hpp"

namespace struclus {

PathType make_path_type(LabelId a, LabelId edge, LabelId b) {
    if (a > b) std::swap(a, b);
    return {a, edge, b};
}

SeedSets enumerate_seeds(CorpusView corpus, double min_sup) {
    std::map<LabelId, std::size_t> vertex_counts;
    std::map<PathType, std::size_t> path_counts;
    std::set<LabelId> seen_vertices;
    std::set<PathType> seen_paths;
    for (const auto* g : corpus) {
        seen_vertices.clear();
        seen_paths.clear();
        seen_vertices.insert(g->vertex_labels().begin(), g->vertex_labels().end());
        for (const auto& e : g->edges())
            seen_paths.insert(make_path_type(g->vertex_label(e.u), e.label, g->vertex_label(e.v)));
        for (auto l : seen_vertices) ++vertex_counts[l];
        for (const auto& p : seen_paths) ++path_counts[p];
    }
    SeedSets seeds;
    for (const auto& [l, c] : vertex_counts)
        if (meets_support(c, corpus.size(), min_sup)) seeds.freq_vertices.push_back(l);
    for (const auto& [p, c] : path_counts)
        if (meets_support(c, corpus.size(), min_sup)) seeds.freq_paths.push_back(p);
    return seeds;
}

TestBudget mining_budget(CorpusView corpus, double min_sup, const SeedSets& seeds, const MinerOptions& opts) {
    return test_budget(corpus.size(), opts.min_sample, quantile_vertex_count(corpus, min_sup),
                       seeds.freq_paths.size(), opts.alpha_total);
}

namespace {

struct Extension {
    bool forward;
    VertexId u;
    // Forward: label of the new vertex. Backward: second endpoint (> u).
    std::uint32_t target;
    LabelId edge;
};

class MaximalSampler {
public:
    MaximalSampler(CorpusView corpus, double min_sup, const SeedSets& seeds, const TestBudget& budget,
                   Rng& rng, const MinerOptions& opts, MiningStats* stats)
        : corpus_(corpus), min_sup_(min_sup), budget_(budget), rng_(rng), opts_(opts), stats_(stats) {
        for (const auto& p : seeds.freq_paths) {
            forward_[p.a].push_back({p.edge, p.b});
            if (p.a != p.b) forward_[p.b].push_back({p.edge, p.a});
            backward_[{p.a, p.b}].push_back(p.edge);
        }
    }

    LabeledGraph run(LabelId start) {
        pattern_.add_vertex(start);
        const std::size_t n = corpus_.size();
        absent_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& labels = corpus_[i]->vertex_labels();
            if (std::find(labels.begin(), labels.end(), start) == labels.end())
                absent_[i] = 1;
            else
                supporters_.push_back(i);
        }
        add_forward(0);

        while (!candidates_.empty()) {
            if (!opts_.exact && tests_ >= budget_.max_tests) break;
            std::uniform_int_distribution<std::size_t> pick(0, candidates_.size() - 1);
            const std::size_t j = pick(rng_);
            const Extension ext = candidates_[j];
            candidates_[j] = candidates_.back();
            candidates_.pop_back();

            LabeledGraph grown = pattern_;
            VertexId fresh = 0;
            if (ext.forward) {
                fresh = grown.add_vertex(ext.target);
                grown.add_edge(ext.u, fresh, ext.edge);
            } else {
                grown.add_edge(ext.u, ext.target, ext.edge);
            }
            if (!frequent(grown)) continue;

            pattern_ = std::move(grown);
            if (ext.forward) {
                candidates_.push_back(ext);  // another neighbour of the same kind
                add_forward(fresh);
                for (VertexId w = 0; w < fresh; ++w) add_backward(w, fresh);
            } else {
                std::erase_if(candidates_, [&](const Extension& c) {
                    return !c.forward && c.u == ext.u && c.target == ext.target;
                });
            }
        }
        return std::move(pattern_);
    }

    std::size_t tests() const noexcept { return tests_; }

private:
    void add_forward(VertexId v) {
        auto it = forward_.find(pattern_.vertex_label(v));
        if (it == forward_.end()) return;
        for (const auto& [edge, other] : it->second) candidates_.push_back({true, v, other, edge});
    }

    void add_backward(VertexId a, VertexId b) {
        if (pattern_.has_edge(a, b)) return;
        LabelId la = pattern_.vertex_label(a), lb = pattern_.vertex_label(b);
        if (la > lb) std::swap(la, lb);
        auto it = backward_.find({la, lb});
        if (it == backward_.end()) return;
        for (LabelId e : it->second) candidates_.push_back({false, std::min(a, b), std::max(a, b), e});
    }

    // Graphs known not to contain the current pattern cannot contain any
    // extension of it, so they are skipped without an isomorphism test.
    bool frequent(const LabeledGraph& grown) {
        const SubgraphMatcher matcher(grown);
        if (stats_) ++stats_->support_queries;
        const std::size_t n = corpus_.size();
        if (opts_.exact) {
            std::vector<std::size_t> kept;
            const double needed = min_sup_ * static_cast<double>(n) - 1e-9;
            for (std::size_t k = 0; k < supporters_.size(); ++k) {
                if (static_cast<double>(kept.size() + supporters_.size() - k) < needed) return false;
                if (matcher.matches(*corpus_[supporters_[k]])) kept.push_back(supporters_[k]);
            }
            if (!meets_support(kept.size(), n, min_sup_)) return false;
            supporters_ = std::move(kept);
            return true;
        }
        std::vector<std::size_t> newly_absent;
        const auto decision = decide_support(n, min_sup_, budget_, rng_, opts_.min_sample, [&](std::size_t i) {
            if (absent_[i]) return false;
            if (matcher.matches(*corpus_[i])) return true;
            newly_absent.push_back(i);
            return false;
        });
        tests_ += decision.tests;
        if (stats_) stats_->binomial_tests += decision.tests;
        if (!decision.frequent()) return false;
        for (auto i : newly_absent) absent_[i] = 1;
        return true;
    }

    CorpusView corpus_;
    double min_sup_;
    const TestBudget& budget_;
    Rng& rng_;
    const MinerOptions& opts_;
    MiningStats* stats_;

    std::map<LabelId, std::vector<std::pair<LabelId, LabelId>>> forward_;
    std::map<std::pair<LabelId, LabelId>, std::vector<LabelId>> backward_;
    LabeledGraph pattern_;
    std::vector<Extension> candidates_;
    std::vector<char> absent_;
    std::vector<std::size_t> supporters_;
    std::size_t tests_ = 0;
};

}  // namespace

std::optional<LabeledGraph> sample_maximal(CorpusView corpus, double min_sup, const SeedSets& seeds,
                                           const TestBudget& budget, Rng& rng, const MinerOptions& opts,
                                           MiningStats* stats, std::size_t* tests_used) {
    if (tests_used) *tests_used = 0;
    if (seeds.freq_vertices.empty() || corpus.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, seeds.freq_vertices.size() - 1);
    const LabelId start = seeds.freq_vertices[pick(rng)];
    MaximalSampler sampler(corpus, min_sup, seeds, budget, rng, opts, stats);
    LabeledGraph result = sampler.run(start);
    if (tests_used) *tests_used = sampler.tests();
    return result;
}

std::vector<LabeledGraph> sample_candidates(CorpusView corpus, double min_sup, std::size_t count,
                                            const MinerOptions& opts, std::uint64_t stream_seed,
                                            const Executor& executor, MiningStats* stats) {
    if (corpus.empty() || count == 0) return {};
    const SeedSets seeds = enumerate_seeds(corpus, min_sup);
    if (seeds.freq_vertices.empty()) return {};
    const TestBudget budget = mining_budget(corpus, min_sup, seeds, opts);

    // Runs go in batches of `count` until `count` distinct patterns are known,
    // a batch adds nothing new, or max_batches is reached. Run r always uses
    // stream r, so batching does not depend on the executor.
    std::vector<LabeledGraph> out;
    for (std::size_t batch = 0; batch < std::max<std::size_t>(1, opts.max_batches) && out.size() < count; ++batch) {
        std::vector<std::optional<LabeledGraph>> runs(count);
        executor.for_each(count, [&](std::size_t r) {
            Rng rng = derive_rng(stream_seed, {batch * count + r});
            runs[r] = sample_maximal(corpus, min_sup, seeds, budget, rng, opts, stats);
        });
        bool added = false;
        for (auto& r : runs) {
            if (!r || out.size() == count) continue;
            const bool duplicate =
                std::any_of(out.begin(), out.end(), [&](const LabeledGraph& g) { return are_isomorphic(g, *r); });
            if (!duplicate) {
                out.push_back(std::move(*r));
                added = true;
            }
        }
        if (!added) break;
    }
    return out;
}

}  // namespace struclus
