#include "struclus/clusterer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "struclus/rng.hpp"

namespace struclus {

namespace {

// Key spaces for derive_rng so that different phases never share a stream.
constexpr std::uint64_t kPreMineKey = 0x11;
constexpr std::uint64_t kPreGreedyKey = 0x12;
constexpr std::uint64_t kUpdateMineKey = 0x13;

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

// Matchers built once per phase; they point into the representatives, which
// must stay in place while the matchers are used.
std::vector<std::vector<SubgraphMatcher>> build_matchers(const std::vector<Cluster>& clusters) {
    std::vector<std::vector<SubgraphMatcher>> out(clusters.size());
    for (std::size_t c = 0; c < clusters.size(); ++c)
        for (const auto& r : clusters[c].representatives) out[c].emplace_back(r.graph);
    return out;
}

std::size_t similarity_with(const LabeledGraph& g, const Fingerprint& fp, const Cluster& cluster,
                            const std::vector<SubgraphMatcher>& matchers) {
    std::size_t sim = 0;
    for (std::size_t r = 0; r < matchers.size(); ++r) {
        const auto& rep = cluster.representatives[r];
        if (!filter_pass(rep.fingerprint, fp)) continue;
        if (matchers[r].matches(g)) sim += rep.size * rep.size;
    }
    return sim;
}

double rank_with(const SubgraphMatcher& matcher, const Fingerprint& fp, std::size_t rep_size,
                 const Cluster& cluster, const Dataset& dataset) {
    std::size_t in_cluster = 0, anywhere = 0, member_sizes = 0;
    for (GraphId id = 0; id < dataset.size(); ++id) {
        if (!filter_pass(fp, dataset.fingerprint(id)) || !matcher.matches(dataset.graph(id))) continue;
        ++anywhere;
        if (std::binary_search(cluster.members.begin(), cluster.members.end(), id)) {
            ++in_cluster;
            member_sizes += dataset.graph_size(id);
        }
    }
    if (in_cluster == 0) return 0.0;
    const double cohesion = static_cast<double>(in_cluster) * static_cast<double>(rep_size) /
                            static_cast<double>(member_sizes);
    const double lift = static_cast<double>(in_cluster) / static_cast<double>(cluster.members.size()) -
                        static_cast<double>(anywhere) / static_cast<double>(dataset.size());
    return cohesion * lift;
}

// Offsets [0, n) ordered by descending rank, ties by offset. Non-positive
// ranks are dropped as long as some rank is positive.
std::vector<std::size_t> select_top(const double* ranks, std::size_t n, std::size_t keep) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ranks[a] > ranks[b]; });
    if (!order.empty() && ranks[order.front()] > 0.0)
        std::erase_if(order, [&](std::size_t i) { return ranks[i] <= 0.0; });
    order.resize(std::min(order.size(), keep));
    return order;
}

std::vector<const LabeledGraph*> corpus_of(const std::vector<GraphId>& ids, const Dataset& dataset) {
    std::vector<const LabeledGraph*> out;
    out.reserve(ids.size());
    for (GraphId id : ids) out.push_back(&dataset.graph(id));
    return out;
}

}  // namespace

void StruClusConfig::validate() const {
    auto fraction = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (!(ls > 0.0 && ls < hs && hs <= 1.0)) throw std::invalid_argument("need 0 < ls < hs <= 1");
    if (!(lr < hr)) throw std::invalid_argument("need lr < hr");
    if (!(alpha_total > 0.0 && alpha_total <= 1.0)) throw std::invalid_argument("alpha_total must lie in (0, 1]");
    if (!(pre_min_sup > 0.0 && pre_min_sup <= 1.0)) throw std::invalid_argument("pre_min_sup must lie in (0, 1]");
    if (!fraction(sim_min)) throw std::invalid_argument("sim_min must lie in [0, 1]");
    if (!(beta >= 0.0)) throw std::invalid_argument("beta must be non-negative");
    if (candidates_per_cluster == 0 || sim_num == 0 || reps_max == 0 || window_w == 0 || min_sample == 0 ||
        pre_cluster_rounds == 0)
        throw std::invalid_argument("counts must be at least 1");
    if (fingerprint.bits == 0) throw std::invalid_argument("fingerprint length must be positive");
}

Dataset::Dataset(GraphDatabase db, const FingerprintConfig& fp_cfg, const Executor& executor)
    : db_(std::move(db)), fp_cfg_(fp_cfg), fingerprints_(db_.graphs.size()), sizes_(db_.graphs.size()) {
    executor.for_each(db_.graphs.size(), [&](std::size_t i) {
        fingerprints_[i] = build_fingerprint(db_.graphs[i], fp_cfg_);
        sizes_[i] = struclus::size(db_.graphs[i]).value;
    });
}

Representative make_representative(LabeledGraph g, const FingerprintConfig& cfg, std::uint64_t uid) {
    Representative r;
    r.fingerprint = build_fingerprint(g, cfg);
    r.size = size(g).value;
    r.graph = std::move(g);
    r.uid = uid;
    return r;
}

CoverageScores coverage_scores(const Clustering& clustering) {
    CoverageScores out;
    out.acov.reserve(clustering.clusters.size());
    for (const auto& c : clustering.clusters) {
        if (c.representatives.empty() || c.members.empty() || c.sum_member_sizes == 0) {
            out.acov.push_back(0.0);
            continue;
        }
        double rep_sizes = 0;
        for (const auto& r : c.representatives) rep_sizes += static_cast<double>(r.size);
        const double mean_rep = rep_sizes / static_cast<double>(c.representatives.size());
        const double mean_member = static_cast<double>(c.sum_member_sizes) / static_cast<double>(c.members.size());
        out.acov.push_back(mean_rep / mean_member);
    }
    const double mean =
        out.acov.empty() ? 0.0
                         : std::accumulate(out.acov.begin(), out.acov.end(), 0.0) / static_cast<double>(out.acov.size());
    out.relcov.reserve(out.acov.size());
    for (double a : out.acov) out.relcov.push_back(mean > 0.0 ? a / mean : 0.0);
    return out;
}

double dynamic_min_sup(double relcov, const StruClusConfig& cfg) {
    if (relcov < cfg.lr) return cfg.ls;
    if (relcov > cfg.hr) return cfg.hs;
    const double slope = (cfg.hs - cfg.ls) / (cfg.hr - cfg.lr);
    return relcov * slope + (cfg.ls - cfg.lr * slope);
}

double rank_representative(const LabeledGraph& rep, const Cluster& cluster, const Dataset& dataset) {
    const SubgraphMatcher matcher(rep);
    return rank_with(matcher, build_fingerprint(rep, dataset.fingerprint_config()), size(rep).value, cluster,
                     dataset);
}

std::size_t cluster_similarity(const LabeledGraph& g, const Fingerprint& g_fp, const Cluster& cluster,
                               bool use_prefilter) {
    std::size_t sim = 0;
    for (const auto& rep : cluster.representatives) {
        if (use_prefilter && !filter_pass(rep.fingerprint, g_fp)) continue;
        if (is_subgraph_iso(rep.graph, g)) sim += rep.size * rep.size;
    }
    return sim;
}

bool representatives_similar(const LabeledGraph& a, const LabeledGraph& b, double sim_min) {
    const double larger = static_cast<double>(std::max(size(a).value, size(b).value));
    // Smallest integer MCS size that reaches the threshold; the epsilon keeps
    // exact products such as 0.3 * 10 from rounding up to 4.
    const auto needed = static_cast<std::size_t>(std::ceil(sim_min * larger - 1e-9));
    if (needed == 0) return true;
    return mcs_size(a, b, GraphSize{needed}).value >= needed;
}

double objective(const Clustering& clustering, const StruClusConfig& cfg) {
    if (clustering.clusters.empty()) return 0.0;
    const auto scores = coverage_scores(clustering);
    double sum = 0;
    for (std::size_t i = 0; i < clustering.clusters.size(); ++i)
        sum += static_cast<double>(clustering.clusters[i].members.size()) * scores.acov[i];
    return sum / std::pow(static_cast<double>(clustering.clusters.size()), cfg.granularity_exponent);
}

bool converged(const std::vector<double>& history, const StruClusConfig& cfg) {
    const std::size_t c = history.size(), w = cfg.window_w, s = cfg.stride_s;
    if (c < s + w) return false;
    const double recent = std::accumulate(history.end() - static_cast<std::ptrdiff_t>(w), history.end(), 0.0);
    const auto earlier_end = history.end() - static_cast<std::ptrdiff_t>(s);
    const double earlier = std::accumulate(earlier_end - static_cast<std::ptrdiff_t>(w), earlier_end, 0.0);
    if (earlier <= 0.0) return recent <= 0.0;
    return recent / earlier <= 1.0 + cfg.beta;
}

std::vector<std::string> audit(const Clustering& clustering, const Dataset& dataset, const StruClusConfig& cfg,
                               bool check_support) {
    std::vector<std::string> issues;
    std::vector<std::size_t> seen(dataset.size(), 0);
    auto check_cluster = [&](const Cluster& c, const std::string& name) {
        if (!std::is_sorted(c.members.begin(), c.members.end())) issues.push_back(name + ": members not sorted");
        std::size_t sum = 0;
        for (GraphId id : c.members) {
            if (id >= dataset.size()) {
                issues.push_back(name + ": unknown graph id " + std::to_string(id));
                continue;
            }
            ++seen[id];
            sum += dataset.graph_size(id);
        }
        if (sum != c.sum_member_sizes) issues.push_back(name + ": cached member size sum is stale");
        for (std::size_t i = 0; i < c.representatives.size(); ++i)
            for (std::size_t j = i + 1; j < c.representatives.size(); ++j)
                if (are_isomorphic(c.representatives[i].graph, c.representatives[j].graph))
                    issues.push_back(name + ": isomorphic representatives");
    };
    for (const auto& c : clustering.clusters) {
        const std::string name = "cluster " + std::to_string(c.id);
        check_cluster(c, name);
        if (c.members.empty()) issues.push_back(name + ": empty");
        if (!check_support) continue;
        if (c.representatives.size() > cfg.reps_max) issues.push_back(name + ": too many representatives");
        std::vector<SubgraphMatcher> matchers;
        for (const auto& r : c.representatives) matchers.emplace_back(r.graph);
        for (GraphId id : c.members)
            if (id < dataset.size() && similarity_with(dataset.graph(id), dataset.fingerprint(id), c, matchers) == 0)
                issues.push_back(name + ": member " + std::to_string(id) + " supports no representative");
    }
    check_cluster(clustering.noise, "noise");
    if (!clustering.noise.representatives.empty()) issues.push_back("noise: has representatives");
    for (GraphId id = 0; id < dataset.size(); ++id)
        if (seen[id] != 1)
            issues.push_back("graph " + std::to_string(id) + " appears " + std::to_string(seen[id]) + " times");
    return issues;
}

LabelVector to_label_vector(const Clustering& clustering) {
    LabelVector out;
    for (const auto& c : clustering.clusters)
        for (GraphId id : c.members) out[id] = static_cast<std::int64_t>(c.id);
    for (GraphId id : clustering.noise.members) out[id] = kNoiseClusterId;
    return out;
}

Clusterer::Clusterer(const Dataset& dataset, StruClusConfig cfg)
    : dataset_(dataset), cfg_(std::move(cfg)), executor_(cfg_.threads) {
    cfg_.validate();
    if (cfg_.fingerprint.bits != dataset_.fingerprint_config().bits ||
        cfg_.fingerprint.max_tree_edges != dataset_.fingerprint_config().max_tree_edges ||
        cfg_.fingerprint.max_cycle_length != dataset_.fingerprint_config().max_cycle_length)
        throw std::invalid_argument("dataset fingerprints were built with a different configuration");
}

void Clusterer::rebuild_members(Cluster& c) const {
    std::sort(c.members.begin(), c.members.end());
    c.sum_member_sizes = 0;
    for (GraphId id : c.members) c.sum_member_sizes += dataset_.graph_size(id);
}

std::vector<long> Clusterer::best_clusters(const std::vector<GraphId>& ids,
                                           const std::vector<Cluster>& clusters) const {
    const auto matchers = build_matchers(clusters);
    std::vector<long> best(ids.size(), -1);
    executor_.for_each(ids.size(), [&](std::size_t i) {
        const GraphId id = ids[i];
        std::size_t best_sim = 0;
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            const std::size_t sim = similarity_with(dataset_.graph(id), dataset_.fingerprint(id), clusters[c], matchers[c]);
            if (sim == 0) continue;
            if (sim > best_sim || (sim == best_sim && clusters[c].id < clusters[static_cast<std::size_t>(best[i])].id)) {
                best_sim = sim;
                best[i] = static_cast<long>(c);
            }
        }
    });
    return best;
}

std::vector<Cluster> Clusterer::pre_cluster(const std::vector<GraphId>& pool, std::vector<GraphId>& leftover) {
    leftover.clear();
    if (pool.empty()) return {};
    const auto corpus = corpus_of(pool, dataset_);
    const std::uint64_t stream = derive_rng(cfg_.seed, {kPreMineKey, iteration_})();
    auto candidates = sample_candidates(corpus, cfg_.pre_min_sup, cfg_.candidates_per_cluster, cfg_.miner_options(),
                                        stream, executor_, &mining_stats_);
    if (candidates.empty()) {
        leftover = pool;
        std::sort(leftover.begin(), leftover.end());
        return {};
    }

    const std::size_t k = candidates.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
    std::vector<char> similar(pairs.size());
    executor_.for_each(pairs.size(), [&](std::size_t p) {
        similar[p] = representatives_similar(candidates[pairs[p].first], candidates[pairs[p].second], cfg_.sim_min);
    });
    std::vector<std::vector<char>> sim(k, std::vector<char>(k, 0));
    for (std::size_t p = 0; p < pairs.size(); ++p)
        sim[pairs[p].first][pairs[p].second] = sim[pairs[p].second][pairs[p].first] = similar[p];

    Rng rng = derive_rng(cfg_.seed, {kPreGreedyKey, iteration_});
    std::vector<std::size_t> best_set;
    std::vector<std::size_t> order(k);
    for (std::size_t round = 0; round < cfg_.pre_cluster_rounds; ++round) {
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::size_t> chosen;
        for (std::size_t c : order)
            if (std::none_of(chosen.begin(), chosen.end(), [&](std::size_t d) { return sim[c][d] != 0; }))
                chosen.push_back(c);
        if (chosen.size() > best_set.size()) best_set = std::move(chosen);
    }
    std::sort(best_set.begin(), best_set.end());

    std::vector<Cluster> fresh(best_set.size());
    std::vector<Representative> reps(best_set.size());
    executor_.for_each(best_set.size(), [&](std::size_t i) {
        reps[i] = make_representative(std::move(candidates[best_set[i]]), cfg_.fingerprint, 0);
    });
    for (std::size_t i = 0; i < fresh.size(); ++i) {
        fresh[i].id = next_cluster_id_++;
        reps[i].uid = next_uid();
        fresh[i].representatives.push_back(std::move(reps[i]));
    }

    const auto best = best_clusters(pool, fresh);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (best[i] < 0)
            leftover.push_back(pool[i]);
        else
            fresh[static_cast<std::size_t>(best[i])].members.push_back(pool[i]);
    }
    std::sort(leftover.begin(), leftover.end());
    std::erase_if(fresh, [](const Cluster& c) { return c.members.empty(); });
    for (auto& c : fresh) rebuild_members(c);
    return fresh;
}

void Clusterer::split_clusters(Clustering& clustering) {
    const auto scores = coverage_scores(clustering);
    const auto& measure = cfg_.split_on_absolute_coverage ? scores.acov : scores.relcov;
    std::vector<GraphId> pool = clustering.noise.members;
    std::vector<Cluster> kept;
    for (std::size_t i = 0; i < clustering.clusters.size(); ++i) {
        auto& c = clustering.clusters[i];
        // aCov is compared inclusively, relCov strictly.
        const bool split = cfg_.split_on_absolute_coverage ? measure[i] <= cfg_.split_threshold
                                                           : measure[i] < cfg_.split_threshold;
        if (split)
            pool.insert(pool.end(), c.members.begin(), c.members.end());
        else
            kept.push_back(std::move(c));
    }
    if (pool.empty()) {
        clustering.clusters = std::move(kept);
        return;
    }
    std::sort(pool.begin(), pool.end());
    std::vector<GraphId> leftover;
    auto fresh = pre_cluster(pool, leftover);
    for (auto& c : fresh) kept.push_back(std::move(c));
    clustering.clusters = std::move(kept);
    clustering.noise.members = std::move(leftover);
    clustering.noise.representatives.clear();
    rebuild_members(clustering.noise);
}

void Clusterer::merge_clusters(Clustering& clustering) {
    similarity_cache_.clear();
    auto& clusters = clustering.clusters;
    for (;;) {
        std::vector<std::pair<std::size_t, std::size_t>> cluster_pairs;
        for (std::size_t i = 0; i < clusters.size(); ++i)
            for (std::size_t j = i + 1; j < clusters.size(); ++j)
                if (!clusters[i].representatives.empty() && !clusters[j].representatives.empty())
                    cluster_pairs.emplace_back(i, j);

        auto key = [](const Representative& a, const Representative& b) {
            return std::minmax(a.uid, b.uid);
        };
        std::vector<std::pair<const Representative*, const Representative*>> pending;
        std::map<std::pair<std::uint64_t, std::uint64_t>, bool> queued;
        for (auto [i, j] : cluster_pairs)
            for (const auto& a : clusters[i].representatives)
                for (const auto& b : clusters[j].representatives) {
                    const auto k = key(a, b);
                    if (similarity_cache_.contains(k) || queued.contains(k)) continue;
                    queued.emplace(k, false);
                    pending.emplace_back(&a, &b);
                }
        std::vector<char> results(pending.size());
        executor_.for_each(pending.size(), [&](std::size_t p) {
            results[p] = representatives_similar(pending[p].first->graph, pending[p].second->graph, cfg_.sim_min);
        });
        for (std::size_t p = 0; p < pending.size(); ++p)
            similarity_cache_[key(*pending[p].first, *pending[p].second)] = results[p] != 0;

        std::vector<std::size_t> parent(clusters.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (auto [i, j] : cluster_pairs) {
            std::size_t count = 0;
            for (const auto& a : clusters[i].representatives)
                for (const auto& b : clusters[j].representatives) count += similarity_cache_.at(key(a, b)) ? 1 : 0;
            if (count >= cfg_.sim_num) {
                const std::size_t ri = find(i), rj = find(j);
                if (ri != rj) {
                    parent[std::max(ri, rj)] = std::min(ri, rj);
                    any = true;
                }
            }
        }
        if (!any) return;

        // Each component collapses into its first cluster in list order.
        std::vector<Cluster> merged;
        std::vector<long> slot(clusters.size(), -1);
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            const std::size_t root = find(i);
            if (slot[root] < 0) {
                slot[root] = static_cast<long>(merged.size());
                merged.push_back(std::move(clusters[i]));
                continue;
            }
            Cluster& into = merged[static_cast<std::size_t>(slot[root])];
            into.id = std::min(into.id, clusters[i].id);
            into.members.insert(into.members.end(), clusters[i].members.begin(), clusters[i].members.end());
            for (auto& r : clusters[i].representatives) {
                const bool duplicate = std::any_of(into.representatives.begin(), into.representatives.end(),
                                                   [&](const Representative& x) { return are_isomorphic(x.graph, r.graph); });
                if (!duplicate) into.representatives.push_back(std::move(r));
            }
        }
        for (auto& c : merged) rebuild_members(c);
        trim_representatives(merged);
        clusters = std::move(merged);
    }
}

void Clusterer::trim_representatives(std::vector<Cluster>& clusters) const {
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t c = 0; c < clusters.size(); ++c)
        if (clusters[c].representatives.size() > cfg_.reps_max)
            for (std::size_t r = 0; r < clusters[c].representatives.size(); ++r) jobs.emplace_back(c, r);
    std::vector<double> ranks(jobs.size());
    executor_.for_each(jobs.size(), [&](std::size_t j) {
        const auto& cluster = clusters[jobs[j].first];
        const auto& rep = cluster.representatives[jobs[j].second];
        ranks[j] = rank_with(SubgraphMatcher(rep.graph), rep.fingerprint, rep.size, cluster, dataset_);
    });
    for (std::size_t begin = 0; begin < jobs.size();) {
        auto& cluster = clusters[jobs[begin].first];
        const std::size_t n = cluster.representatives.size();
        std::vector<Representative> kept;
        for (std::size_t r : select_top(ranks.data() + begin, n, cfg_.reps_max)) kept.push_back(std::move(cluster.representatives[r]));
        cluster.representatives = std::move(kept);
        begin += n;
    }
}

void Clusterer::update_representatives(Clustering& clustering) {
    auto& clusters = clustering.clusters;
    const auto scores = coverage_scores(clustering);
    const auto opts = cfg_.miner_options();

    // Mining: one task per cluster, or the whole executor per cluster when
    // there are fewer clusters than threads. Both give the same candidates.
    std::vector<std::vector<LabeledGraph>> candidates(clusters.size());
    auto mine = [&](std::size_t c, const Executor& inner) {
        if (clusters[c].members.empty()) return;
        const auto corpus = corpus_of(clusters[c].members, dataset_);
        const std::uint64_t stream = derive_rng(cfg_.seed, {kUpdateMineKey, iteration_, clusters[c].id})();
        candidates[c] = sample_candidates(corpus, dynamic_min_sup(scores.relcov[c], cfg_),
                                          cfg_.candidates_per_cluster, opts, stream, inner, &mining_stats_);
    };
    if (clusters.size() < executor_.threads()) {
        for (std::size_t c = 0; c < clusters.size(); ++c) mine(c, executor_);
    } else {
        executor_.for_each(clusters.size(), [&](std::size_t c) { mine(c, Executor{1}); });
    }

    // Ranking: one task per (cluster, candidate).
    std::vector<std::pair<std::size_t, std::size_t>> jobs;
    for (std::size_t c = 0; c < clusters.size(); ++c)
        for (std::size_t k = 0; k < candidates[c].size(); ++k) jobs.emplace_back(c, k);
    std::vector<Representative> reps(jobs.size());
    std::vector<double> ranks(jobs.size());
    executor_.for_each(jobs.size(), [&](std::size_t j) {
        const auto [c, k] = jobs[j];
        reps[j] = make_representative(std::move(candidates[c][k]), cfg_.fingerprint, 0);
        const SubgraphMatcher matcher(reps[j].graph);
        ranks[j] = rank_with(matcher, reps[j].fingerprint, reps[j].size, clusters[c], dataset_);
    });

    std::size_t begin = 0;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        const std::size_t end = begin + candidates[c].size();
        clusters[c].representatives.clear();
        for (std::size_t offset : select_top(ranks.data() + begin, end - begin, cfg_.reps_max)) {
            const std::size_t j = begin + offset;
            reps[j].uid = next_uid();
            clusters[c].representatives.push_back(std::move(reps[j]));
        }
        begin = end;
    }
}

void Clusterer::assign_all(Clustering& clustering) {
    std::vector<GraphId> ids(dataset_.size());
    std::iota(ids.begin(), ids.end(), 0);
    const auto best = best_clusters(ids, clustering.clusters);
    for (auto& c : clustering.clusters) c.members.clear();
    clustering.noise.members.clear();
    for (GraphId id : ids) {
        if (best[id] < 0)
            clustering.noise.members.push_back(id);
        else
            clustering.clusters[static_cast<std::size_t>(best[id])].members.push_back(id);
    }
    std::erase_if(clustering.clusters, [](const Cluster& c) { return c.members.empty(); });
    for (auto& c : clustering.clusters) rebuild_members(c);
    rebuild_members(clustering.noise);
}

Clustering Clusterer::run(RunStats* stats, const PhaseObserver& observer) {
    if (dataset_.size() == 0) throw std::invalid_argument("cannot cluster an empty dataset");
    const auto start = std::chrono::steady_clock::now();
    auto notify = [&](std::string_view phase, const Clustering& c) {
        if (observer) observer(phase, c);
    };

    Clustering clustering;
    std::vector<GraphId> all(dataset_.size());
    std::iota(all.begin(), all.end(), 0);
    iteration_ = 0;
    clustering.clusters = pre_cluster(all, clustering.noise.members);
    rebuild_members(clustering.noise);
    notify("pre_cluster", clustering);

    RunStats local;
    RunStats& out = stats ? *stats : local;
    out = RunStats{};
    for (std::size_t it = 1; it <= cfg_.max_iterations; ++it) {
        const auto iteration_start = std::chrono::steady_clock::now();
        const std::size_t queries_before = support_queries();
        iteration_ = it;
        split_clusters(clustering);
        notify("split", clustering);
        merge_clusters(clustering);
        notify("merge", clustering);
        update_representatives(clustering);
        notify("update", clustering);
        assign_all(clustering);
        notify("assign", clustering);

        IterationStats s;
        s.z = objective(clustering, cfg_);
        s.cluster_count = clustering.clusters.size();
        s.noise_size = clustering.noise.members.size();
        s.support_queries = support_queries() - queries_before;
        s.wall_ms = elapsed_ms(iteration_start);
        out.iterations.push_back(s);
        out.z_history.push_back(s.z);
        if (converged(out.z_history, cfg_)) {
            out.converged = true;
            break;
        }
    }
    const auto scores = coverage_scores(clustering);
    for (std::size_t i = 0; i < clustering.clusters.size(); ++i)
        out.cluster_acov.emplace_back(clustering.clusters[i].id, scores.acov[i]);
    out.support_queries = support_queries();
    out.wall_ms = elapsed_ms(start);
    return clustering;
}

}  // namespace struclus
