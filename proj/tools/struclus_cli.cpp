#include <cstdio>
#include <exception>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "struclus/clusterer.hpp"
#include "struclus/eval.hpp"
#include "struclus/io.hpp"
#include "struclus/miner.hpp"
#include "struclus/synth.hpp"

namespace {

using namespace struclus;

struct ClusterArgs {
    std::string input, output, stats;
    bool verbose = false;
    StruClusConfig cfg;
};

struct GenerateArgs {
    std::string output, labels;
    SynthConfig cfg;
};

struct EvaluateArgs {
    std::string clusters, truth;
};

struct MineArgs {
    std::string input;
    double min_sup = 0.4;
    std::size_t count = 25;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool exact = false;
    MinerOptions opts;
};

int run_cluster(const ClusterArgs& a) {
    const Executor executor(a.cfg.threads);
    const Dataset dataset(read_graph_db(a.input), a.cfg.fingerprint, executor);
    Clusterer clusterer(dataset, a.cfg);
    RunStats stats;
    const auto clustering = clusterer.run(&stats, [&](std::string_view phase, const Clustering& c) {
        if (a.verbose && phase == "assign")
            std::cerr << "iteration " << stats.iterations.size() + 1 << ": clusters " << c.clusters.size()
                      << ", noise " << c.noise.members.size() << '\n';
    });
    write_clustering(std::filesystem::path(a.output), clustering);
    if (!a.stats.empty()) write_stats(a.stats, stats);
    return 0;
}

int run_generate(const GenerateArgs& a) {
    const auto data = generate(a.cfg);
    write_graph_db(std::filesystem::path(a.output), data.db);
    if (!a.labels.empty()) write_label_vector(std::filesystem::path(a.labels), data.truth(), "class");
    return 0;
}

int run_evaluate(const EvaluateArgs& a) {
    const auto clusters = read_label_vector(std::filesystem::path(a.clusters));
    const auto truth = read_label_vector(std::filesystem::path(a.truth));
    std::cout << std::setprecision(6) << std::fixed;
    std::cout << "nvi\t" << nvi(clusters, truth) << '\n';
    std::cout << "fm\t" << fowlkes_mallows(clusters, truth) << '\n';
    std::cout << "purity\t" << purity(clusters, truth) << '\n';
    return 0;
}

int run_mine(MineArgs a) {
    const auto db = read_graph_db(std::filesystem::path(a.input));
    const auto corpus = make_corpus(db.graphs);
    a.opts.exact = a.exact;
    const auto patterns =
        sample_candidates(corpus, a.min_sup, a.count, a.opts, a.seed, Executor(a.threads));
    for (std::size_t i = 0; i < patterns.size(); ++i) write_graph(std::cout, patterns[i], *db.labels, i);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural clustering of labeled graph datasets"};
    app.require_subcommand(1);

    ClusterArgs cl;
    auto* cluster = app.add_subcommand("cluster", "Cluster a graph dataset");
    cluster->add_option("--input", cl.input, "Dataset file")->required()->check(CLI::ExistingFile);
    cluster->add_option("--output", cl.output, "Clustering TSV to write")->required();
    cluster->add_option("--stats", cl.stats, "Run statistics JSON to write");
    cluster->add_option("--seed", cl.cfg.seed, "Random seed")->capture_default_str();
    cluster->add_option("--threads", cl.cfg.threads, "Worker threads, 0 = all cores")->capture_default_str();
    cluster->add_flag("--exact-support", cl.cfg.exact_support, "Count support by full scans");
    cluster->add_option("--alpha", cl.cfg.alpha_total, "Overall support-counting error bound")->capture_default_str();
    cluster->add_option("--candidates", cl.cfg.candidates_per_cluster, "Sampled patterns per cluster")
        ->capture_default_str();
    cluster->add_option("--ls", cl.cfg.ls, "Lowest dynamic minimum support")->capture_default_str();
    cluster->add_option("--lr", cl.cfg.lr, "Relative coverage mapped to --ls")->capture_default_str();
    cluster->add_option("--hs", cl.cfg.hs, "Highest dynamic minimum support")->capture_default_str();
    cluster->add_option("--hr", cl.cfg.hr, "Relative coverage mapped to --hs")->capture_default_str();
    cluster->add_option("--split-threshold", cl.cfg.split_threshold, "Coverage below which clusters split")
        ->capture_default_str();
    cluster->add_flag("--split-on-acov", cl.cfg.split_on_absolute_coverage,
                      "Split on absolute instead of relative coverage");
    cluster->add_option("--sim-min", cl.cfg.sim_min, "Representative similarity threshold")->capture_default_str();
    cluster->add_option("--sim-num", cl.cfg.sim_num, "Similar pairs needed to merge")->capture_default_str();
    cluster->add_option("--reps-max", cl.cfg.reps_max, "Representatives per cluster")->capture_default_str();
    cluster->add_option("--granularity", cl.cfg.granularity_exponent, "Cluster-count exponent of the objective")
        ->capture_default_str();
    cluster->add_option("--beta", cl.cfg.beta, "Minimum relative objective increase")->capture_default_str();
    cluster->add_option("--window", cl.cfg.window_w, "Convergence averaging width")->capture_default_str();
    cluster->add_option("--stride", cl.cfg.stride_s, "Convergence look-back distance")->capture_default_str();
    cluster->add_option("--min-sample", cl.cfg.min_sample, "Initial support sample size")->capture_default_str();
    cluster->add_option("--pre-min-sup", cl.cfg.pre_min_sup, "Minimum support for pre-clustering")
        ->capture_default_str();
    cluster->add_option("--max-iterations", cl.cfg.max_iterations, "Iteration cap")->capture_default_str();
    cluster->add_flag("--verbose", cl.verbose, "Report progress on stderr");

    GenerateArgs ge;
    auto* gen = app.add_subcommand("generate", "Generate a synthetic dataset with ground truth");
    gen->add_option("--size", ge.cfg.dataset_size, "Number of graphs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("--output", ge.output, "Dataset file to write")->required();
    gen->add_option("--labels", ge.labels, "Ground-truth TSV to write");
    gen->add_option("--seed", ge.cfg.seed, "Random seed")->capture_default_str();
    gen->add_option("--clusters", ge.cfg.num_clusters, "Number of clusters")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("--noise-fraction", ge.cfg.noise_graph_fraction, "Fraction of noise graphs")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    gen->add_option("--vertex-labels", ge.cfg.num_vertex_labels, "Vertex alphabet size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gen->add_option("--edge-labels", ge.cfg.num_edge_labels, "Edge alphabet size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    std::string weights = "sampled";
    gen->add_option("--label-weights", weights, "Label frequencies: 'sampled' (Exp(1) draws) or 'decay' (e^-k)")
        ->check(CLI::IsMember({"sampled", "decay"}))
        ->capture_default_str();

    EvaluateArgs ev;
    auto* eval = app.add_subcommand("evaluate", "Compare a clustering with ground truth");
    eval->add_option("--clusters", ev.clusters, "Clustering TSV")->required()->check(CLI::ExistingFile);
    eval->add_option("--truth", ev.truth, "Ground-truth TSV")->required()->check(CLI::ExistingFile);

    MineArgs mi;
    auto* mine = app.add_subcommand("mine", "Sample maximal frequent subgraphs");
    mine->add_option("--input", mi.input, "Dataset file")->required()->check(CLI::ExistingFile);
    mine->add_option("--min-sup", mi.min_sup, "Minimum support in (0, 1]")
        ->check(CLI::Range(0.0, 1.0) & CLI::PositiveNumber)
        ->capture_default_str();
    mine->add_option("--count", mi.count, "Maximum number of patterns")->capture_default_str();
    mine->add_option("--seed", mi.seed, "Random seed")->capture_default_str();
    mine->add_option("--threads", mi.threads, "Worker threads, 0 = all cores")->capture_default_str();
    mine->add_flag("--exact", mi.exact, "Count support by full scans");
    mine->add_option("--alpha", mi.opts.alpha_total, "Overall support-counting error bound")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    ge.cfg.label_weighting = weights == "decay" ? LabelWeighting::Decay : LabelWeighting::Sampled;

    // Inconsistent settings are usage errors; everything after this is a runtime error.
    try {
        if (*cluster) cl.cfg.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*cluster) return run_cluster(cl);
        if (*gen) return run_generate(ge);
        if (*eval) return run_evaluate(ev);
        if (*mine) return run_mine(mi);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
