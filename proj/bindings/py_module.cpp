#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rforge/aux_graph.hpp"
#include "rforge/bounds.hpp"
#include "rforge/census.hpp"
#include "rforge/game.hpp"
#include "rforge/gamma.hpp"
#include "rforge/json_io.hpp"
#include "rforge/pipeline.hpp"
#include "rforge/solve.hpp"

namespace py = pybind11;
using namespace rforge;

namespace {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    return Graph(n, std::move(edges));
}

ThreeGraph make_three_graph(int n, std::vector<Triple> triples) {
    return ThreeGraph(n, std::move(triples));
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "construction and verification lab for triple-system Ramsey problems";

    py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
    py::register_exception<SizeLimitExceeded>(mod, "SizeLimitExceeded", PyExc_RuntimeError);
    py::register_exception<ConstructionFailed>(mod, "ConstructionFailed", PyExc_RuntimeError);

    py::class_<Graph>(mod, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
        .def("adjacent", &Graph::adjacent)
        .def("complement", &Graph::complement)
        .def("to_json", [](const Graph& g) { return to_json(g); })
        .def_static("from_json", [](const std::string& s) { return graph_from_json(s); })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<ThreeGraph>(mod, "ThreeGraph")
        .def(py::init(&make_three_graph), py::arg("n"), py::arg("triples") = std::vector<Triple>{})
        .def_property_readonly("n", &ThreeGraph::vertex_count)
        .def_property_readonly("triples",
                               [](const ThreeGraph& h) { return h.triples(); })
        .def("has_triple", &ThreeGraph::has_triple)
        .def("to_json", [](const ThreeGraph& h) { return to_json(h); })
        .def_static("from_json", [](const std::string& s) { return three_graph_from_json(s); })
        .def("__repr__", [](const ThreeGraph& h) {
            return "ThreeGraph(n=" + std::to_string(h.vertex_count()) +
                   ", triples=" + std::to_string(h.triple_count()) + ")";
        });

    py::class_<PairColoring>(mod, "PairColoring")
        .def(py::init<int, int>(), py::arg("points"), py::arg("palette_size"))
        .def_property_readonly("points", &PairColoring::points)
        .def_property_readonly("palette_size", &PairColoring::palette_size)
        .def("color", &PairColoring::color)
        .def("set_color", &PairColoring::set_color);

    mod.def("independence_number", [](const Graph& g) {
        auto r = independence_number(g);
        return py::make_tuple(r.value, r.witness);
    });
    mod.def("independence_number_3", [](const ThreeGraph& h) {
        auto r = independence_number(h);
        return py::make_tuple(r.value, r.witness);
    });
    mod.def("girth", [](const Graph& g) -> py::object {
        auto r = girth(g);
        if (!r) return py::none();
        return py::int_(*r);
    });
    mod.def("hom_exists", [](const Graph& src, const Graph& dst) {
        return hom_exists(src, dst).exists;
    });

    mod.def(
        "construct_auxiliary",
        [](int g, int m, std::optional<int> t, std::optional<double> p, int attempts,
           uint64_t seed) {
            AuxParams params;
            params.g = g;
            params.m = m;
            params.t = t;
            params.p = p;
            params.attempts = attempts;
            AuxResult res = construct_auxiliary(params, seed);
            py::dict cert;
            cert["girth_ok"] = res.certificate.girth_ok;
            cert["girth"] = res.certificate.girth
                                ? py::object(py::int_(*res.certificate.girth))
                                : py::object(py::none());
            cert["alpha2"] = res.certificate.alpha2;
            cert["deletions_cycles"] = res.certificate.deletions_cycles;
            cert["deletions_bisets"] = res.certificate.deletions_bisets;
            cert["attempts_used"] = res.certificate.attempts_used;
            cert["property2_ok"] = res.certificate.property2_ok;
            cert["property3_ok"] = res.certificate.property3_ok;
            return py::make_tuple(res.graph, cert);
        },
        py::arg("g") = 3, py::arg("m") = 10, py::arg("t") = py::none(),
        py::arg("p") = py::none(), py::arg("attempts") = 64, py::arg("seed") = 0);

    mod.def("random_coloring", &random_coloring, py::arg("points"),
            py::arg("palette_size"), py::arg("seed"));
    mod.def("build_gamma", &build_gamma, py::arg("chi"), py::arg("palette"));
    mod.def("build_gamma_cfs", &build_gamma_cfs, py::arg("chi"), py::arg("palette"));
    mod.def(
        "verify_link_free",
        [](const ThreeGraph& gamma, const Graph& forbidden) {
            auto r = verify_link_free(gamma, forbidden);
            return py::make_tuple(r.free, r.vertex, r.mapping);
        },
        py::arg("gamma"), py::arg("forbidden"));
    mod.def(
        "find_tripartite_hole",
        [](const ThreeGraph& gamma, int n, int exhaustive_limit, uint64_t seed) {
            auto r = find_tripartite_hole(gamma, n, exhaustive_limit, seed);
            const char* status = r.status == HoleStatus::Found     ? "found"
                                 : r.status == HoleStatus::Absent ? "absent"
                                                                  : "not_decided";
            return py::make_tuple(status,
                                  std::vector<std::vector<int>>{r.parts[0], r.parts[1],
                                                                r.parts[2]});
        },
        py::arg("gamma"), py::arg("n"), py::arg("exhaustive_limit") = 24,
        py::arg("seed") = 0);

    mod.def("enumerate_triangle_free", &enumerate_triangle_free, py::arg("n"),
            py::arg("palette"));
    mod.def(
        "census_vs_bound",
        [](int n, const Graph& palette, int g, double c) {
            auto r = census_vs_bound(n, palette, g, c);
            return py::make_tuple(r.count, r.bound.log(), r.log_ratio);
        },
        py::arg("n"), py::arg("palette"), py::arg("g") = 3, py::arg("c") = 1e-4);

    mod.def(
        "play_game",
        [](int s, int n, const std::string& painter_name, uint64_t seed) {
            CliqueStarBuilder builder(s, n);
            std::unique_ptr<Painter> painter;
            if (painter_name == "random")
                painter = std::make_unique<RandomPainter>(seed);
            else if (painter_name == "all-red")
                painter = std::make_unique<AllRedPainter>();
            else if (painter_name == "all-blue")
                painter = std::make_unique<AllBluePainter>();
            else
                throw DomainError("unknown painter " + painter_name);
            GameResult r = play_game(s, n, builder, *painter);
            py::dict d;
            d["red_win"] = r.red_win;
            d["witness"] = r.witness;
            d["vertices"] = r.vertices;
            d["red_edges"] = r.red_edges;
            d["total_edges"] = r.total_edges;
            d["certified"] = certify_outcome(r);
            d["transcript"] = transcript_to_json(r);
            return d;
        },
        py::arg("s"), py::arg("n"), py::arg("painter") = "random", py::arg("seed") = 0);

    mod.def(
        "reduce_on_host",
        [](const ThreeGraph& host, int s, int n, uint64_t num, uint64_t den) {
            ReductionResult r = reduce_on_host(host, s, n, num, den);
            py::dict d;
            d["red"] = r.red;
            d["witness"] = r.witness;
            d["certified"] = r.certified;
            d["required_hosts"] = r.required_hosts;
            d["embedding"] = r.embedding;
            return d;
        },
        py::arg("host"), py::arg("s"), py::arg("n"), py::arg("alpha_num") = 1,
        py::arg("alpha_den") = 3);
    mod.def("required_host_size", &required_host_size, py::arg("s"), py::arg("n"),
            py::arg("alpha_num"), py::arg("alpha_den"));

    mod.def(
        "lower_bound_l31",
        [](int m, double p, int n, double delta) {
            auto r = lower_bound_l31(m, p, n, delta);
            return r.value.log();
        },
        py::arg("m"), py::arg("p"), py::arg("n"), py::arg("delta"));
    mod.def(
        "appendix_eval",
        [](int s, int n) {
            auto r = appendix_eval(s, n);
            py::dict d;
            d["log_m"] = r.log_m;
            d["p"] = r.p;
            d["min_branch_log"] = r.min_branch.log();
            d["p_in_unit"] = r.p_in_unit;
            d["one_minus_p3_bounded"] = r.one_minus_p3_bounded;
            return d;
        },
        py::arg("s"), py::arg("n"));
    mod.def("link_vs_link_bound", &link_vs_link_bound, py::arg("s"), py::arg("n"));
    mod.def(
        "f3_small",
        [](int N, int s, int t) {
            auto r = f3_small(N, s, t);
            return py::make_tuple(r.value, r.witness, r.graphs_checked);
        },
        py::arg("N"), py::arg("s"), py::arg("t"));
    mod.def("e_recursion_beta", [] {
        auto c = e_recursion_beta();
        return py::make_tuple(c.alpha, c.beta, c.six_beta, c.residual);
    });
    mod.def(
        "ramsey_upper_eval",
        [](int s, int n) {
            auto r = ramsey_upper_eval(s, n);
            return py::make_tuple(r.raw.log(), r.cap.log(), r.raw_le_cap);
        },
        py::arg("s"), py::arg("n"));

    mod.def(
        "run_pipeline",
        [](int g, int m, std::optional<int> t, int N, int n, int trials, uint64_t seed,
           int parallel, std::optional<Graph> palette, int hole_exhaustive_limit) {
            PipelineParams params;
            params.g = g;
            params.m = m;
            params.t = t;
            params.N = N;
            params.n = n;
            params.trials = trials;
            params.seed = seed;
            params.parallel = parallel;
            params.palette = std::move(palette);
            params.hole_exhaustive_limit = hole_exhaustive_limit;
            return run_pipeline(params).dump();
        },
        py::arg("g") = 3, py::arg("m") = 10, py::arg("t") = py::none(),
        py::arg("N") = 12, py::arg("n") = 2, py::arg("trials") = 5, py::arg("seed") = 0,
        py::arg("parallel") = 1, py::arg("palette") = py::none(),
        py::arg("hole_exhaustive_limit") = 24);
}
