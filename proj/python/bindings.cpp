#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "struclus/clusterer.hpp"
#include "struclus/eval.hpp"
#include "struclus/io.hpp"
#include "struclus/isomorphism.hpp"
#include "struclus/miner.hpp"
#include "struclus/synth.hpp"

namespace py = pybind11;
using namespace struclus;

namespace {

// Labels cross the boundary as strings; each database owns its label table.
LabeledGraph to_graph(LabelTable& labels, const std::vector<std::string>& vertices,
                      const std::vector<std::tuple<VertexId, VertexId, std::string>>& edges) {
    LabeledGraph g;
    for (const auto& v : vertices) g.add_vertex(labels.intern(v));
    for (const auto& [u, v, l] : edges) g.add_edge(u, v, labels.intern(l));
    return g;
}

py::dict graph_dict(const LabeledGraph& g, const LabelTable& labels) {
    py::list vs, es;
    for (auto l : g.vertex_labels()) vs.append(labels.name(l));
    for (const auto& e : g.edges()) es.append(py::make_tuple(e.u, e.v, labels.name(e.label)));
    py::dict d;
    d["vertices"] = vs;
    d["edges"] = es;
    return d;
}

py::dict stats_dict(const RunStats& s) {
    py::dict d;
    d["iterations"] = s.iterations.size();
    d["converged"] = s.converged;
    d["z_history"] = s.z_history;
    d["cluster_acov"] = s.cluster_acov;
    d["support_queries"] = s.support_queries;
    d["wall_ms"] = s.wall_ms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_struclus, m) {
    m.doc() = "Structural clustering of labeled graph datasets";

    py::register_exception<IoError>(m, "IoError", PyExc_IOError);

    py::class_<GraphDatabase>(m, "Database")
        .def(py::init<>())
        .def("__len__", [](const GraphDatabase& db) { return db.graphs.size(); })
        .def(
            "add_graph",
            [](GraphDatabase& db, const std::vector<std::string>& vertices,
               const std::vector<std::tuple<VertexId, VertexId, std::string>>& edges) {
                db.graphs.push_back(to_graph(*db.labels, vertices, edges));
                return db.graphs.size() - 1;
            },
            py::arg("vertices"), py::arg("edges") = std::vector<std::tuple<VertexId, VertexId, std::string>>{})
        .def("graph", [](const GraphDatabase& db, std::size_t i) {
            if (i >= db.graphs.size()) throw py::index_error("graph id out of range");
            return graph_dict(db.graphs[i], *db.labels);
        })
        .def("size_of", [](const GraphDatabase& db, std::size_t i) {
            if (i >= db.graphs.size()) throw py::index_error("graph id out of range");
            return size(db.graphs[i]).value;
        })
        .def("to_text", [](const GraphDatabase& db) {
            std::ostringstream out;
            write_graph_db(out, db);
            return out.str();
        })
        .def_static("from_text", [](const std::string& text) {
            std::istringstream in(text);
            return read_graph_db(in);
        })
        .def_static("read", [](const std::filesystem::path& p) { return read_graph_db(p); })
        .def("write", [](const GraphDatabase& db, const std::filesystem::path& p) { write_graph_db(p, db); });

    m.def(
        "generate",
        [](std::size_t size, std::uint64_t seed, std::size_t clusters, double noise_fraction, bool sampled_weights) {
            SynthConfig c;
            c.dataset_size = size;
            c.seed = seed;
            c.num_clusters = clusters;
            c.noise_graph_fraction = noise_fraction;
            c.label_weighting = sampled_weights ? LabelWeighting::Sampled : LabelWeighting::Decay;
            auto data = generate(c);
            return py::make_tuple(std::move(data.db), data.truth());
        },
        py::arg("size") = 1000, py::arg("seed") = 1, py::arg("clusters") = 100, py::arg("noise_fraction") = 0.05,
        py::arg("sampled_weights") = true,
        "Synthetic dataset with ground truth. Returns (Database, {graph_id: class}).");

    m.def(
        "cluster",
        [](const GraphDatabase& db, const py::dict& options) {
            StruClusConfig cfg;
            for (auto [k, v] : options) {
                const auto key = k.cast<std::string>();
                if (key == "seed") cfg.seed = v.cast<std::uint64_t>();
                else if (key == "threads") cfg.threads = v.cast<unsigned>();
                else if (key == "exact_support") cfg.exact_support = v.cast<bool>();
                else if (key == "alpha") cfg.alpha_total = v.cast<double>();
                else if (key == "candidates") cfg.candidates_per_cluster = v.cast<std::size_t>();
                else if (key == "sim_min") cfg.sim_min = v.cast<double>();
                else if (key == "sim_num") cfg.sim_num = v.cast<std::size_t>();
                else if (key == "reps_max") cfg.reps_max = v.cast<std::size_t>();
                else if (key == "split_threshold") cfg.split_threshold = v.cast<double>();
                else if (key == "pre_min_sup") cfg.pre_min_sup = v.cast<double>();
                else if (key == "granularity") cfg.granularity_exponent = v.cast<double>();
                else if (key == "beta") cfg.beta = v.cast<double>();
                else if (key == "max_iterations") cfg.max_iterations = v.cast<std::size_t>();
                else throw py::key_error("unknown option '" + key + "'");
            }
            RunStats stats;
            LabelVector labels;
            {
                py::gil_scoped_release release;
                const Dataset dataset(db, cfg.fingerprint, Executor(cfg.threads));
                Clusterer clusterer(dataset, cfg);
                labels = to_label_vector(clusterer.run(&stats));
            }
            return py::make_tuple(labels, stats_dict(stats));
        },
        py::arg("db"), py::arg("options") = py::dict(),
        "Cluster a database. Returns ({graph_id: cluster_id or -1}, stats).");

    m.def(
        "mine",
        [](const GraphDatabase& db, double min_sup, std::size_t count, std::uint64_t seed, bool exact) {
            MinerOptions o;
            o.exact = exact;
            const auto patterns = sample_candidates(make_corpus(db.graphs), min_sup, count, o, seed);
            py::list out;
            for (const auto& p : patterns) out.append(graph_dict(p, *db.labels));
            return out;
        },
        py::arg("db"), py::arg("min_sup"), py::arg("count") = 25, py::arg("seed") = 1, py::arg("exact") = false,
        "Sample maximal frequent connected patterns.");

    m.def(
        "is_subgraph",
        [](const GraphDatabase& db, std::size_t pattern, std::size_t target) {
            return is_subgraph_iso(db.graphs.at(pattern), db.graphs.at(target));
        },
        "Whether graph `pattern` embeds into graph `target` (ids in one database).");
    m.def(
        "mcs_size",
        [](const GraphDatabase& db, std::size_t a, std::size_t b) {
            return mcs_size(db.graphs.at(a), db.graphs.at(b)).value;
        },
        "|V| + |E| of a maximum connected common subgraph.");

    m.def("nvi", &nvi);
    m.def("fowlkes_mallows", &fowlkes_mallows);
    m.def("purity", &purity);
}
