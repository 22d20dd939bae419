#include "rforge/pipeline.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

#include "rforge/aux_graph.hpp"
#include "rforge/gamma.hpp"
#include "rforge/json_io.hpp"
#include "rforge/rng.hpp"

namespace rforge {

namespace {

const char* hole_label(HoleStatus s) {
    switch (s) {
        case HoleStatus::Found: return "found";
        case HoleStatus::Absent: return "absent";
        default: return "not_decided";
    }
}

// Runs body(i) for i in [0, count) on `workers` threads. Exceptions from any
// worker resurface on the caller.
void for_each_index(int count, int workers, const std::function<void(int)>& body) {
    if (workers <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto run = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(workers, count); ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace

nlohmann::json run_pipeline(const PipelineParams& params) {
    if (params.N < 1 || params.n < 1 || params.trials < 1)
        throw DomainError("pipeline: need N, n, trials >= 1");

    nlohmann::json report;
    report["config"] = {{"g", params.g},
                        {"m", params.m},
                        {"N", params.N},
                        {"n", params.n},
                        {"trials", params.trials},
                        {"seed", params.seed},
                        {"hole_exhaustive_limit", params.hole_exhaustive_limit}};
    if (params.t) report["config"]["t"] = *params.t;

    Graph palette = empty_graph(0);
    if (params.palette) {
        palette = *params.palette;
        report["palette"] = {{"source", "given"},
                             {"vertices", palette.vertex_count()},
                             {"edges", palette.edge_count()}};
    } else {
        AuxParams ap;
        ap.g = params.g;
        ap.m = params.m;
        ap.t = params.t;
        AuxResult aux = construct_auxiliary(ap, Rng::derive(params.seed, 0x9a1e77));
        palette = aux.graph;
        report["palette"] = {{"source", "constructed"},
                             {"vertices", palette.vertex_count()},
                             {"edges", palette.edge_count()},
                             {"girth_ok", aux.certificate.girth_ok},
                             {"alpha2", aux.certificate.alpha2},
                             {"attempts_used", aux.certificate.attempts_used}};
    }
    if (palette.vertex_count() < 1) throw DomainError("pipeline: empty palette");

    // A palette with odd girth above g has no homomorphic image of any odd
    // cycle up to g, which is what the per-vertex link check certifies below.
    std::vector<int> cycle_lengths;
    for (int len = 3; len <= params.g; len += 2) cycle_lengths.push_back(len);
    report["forbidden_cycles"] = cycle_lengths;

    std::vector<nlohmann::json> trial_reports(size_t(params.trials));
    std::vector<char> is_instance(size_t(params.trials), 0);
    std::vector<char> link_failed(size_t(params.trials), 0);
    for_each_index(params.trials, params.parallel, [&](int tr) {
        uint64_t chi_seed = Rng::derive(params.seed, 2 * uint64_t(tr) + 1);
        PairColoring chi = random_coloring(params.N, palette.vertex_count(), chi_seed);
        ThreeGraph gamma = build_gamma(chi, palette);

        bool links_ok = true;
        nlohmann::json link_checks = nlohmann::json::array();
        for (int len : cycle_lengths) {
            LinkFreeResult lf = verify_link_free(gamma, cycle_graph(len));
            link_checks.push_back({{"cycle", len}, {"free", lf.free}});
            if (!lf.free) {
                links_ok = false;
                link_checks.back()["violating_vertex"] = lf.vertex;
            }
        }
        link_failed[tr] = !links_ok;

        HoleResult hole = find_tripartite_hole(gamma, params.n,
                                               params.hole_exhaustive_limit,
                                               Rng::derive(chi_seed, 0x401e));
        bool certified = links_ok && hole.status != HoleStatus::NotDecided;
        is_instance[tr] = links_ok && hole.status == HoleStatus::Absent;

        nlohmann::json t = {{"trial", tr},
                            {"seed", chi_seed},
                            {"triples", gamma.triple_count()},
                            {"links", std::move(link_checks)},
                            {"links_ok", links_ok},
                            {"hole", hole_label(hole.status)},
                            {"certified", certified},
                            {"instance", bool(is_instance[tr])}};
        if (hole.status == HoleStatus::Found)
            t["hole_parts"] = {hole.parts[0], hole.parts[1], hole.parts[2]};
        trial_reports[tr] = std::move(t);
    });

    nlohmann::json trials = nlohmann::json::array();
    for (auto& t : trial_reports) trials.push_back(std::move(t));
    report["trials"] = std::move(trials);
    int link_failures = 0, first_instance = -1;
    for (int tr = 0; tr < params.trials; ++tr) {
        link_failures += link_failed[tr];
        if (is_instance[tr] && first_instance < 0) first_instance = tr;
    }
    report["link_failures"] = link_failures;
    if (first_instance >= 0) {
        report["outcome"] = "instance_found";
        report["first_instance"] = first_instance;
    } else {
        report["outcome"] = "no_instance_found";
    }
    return report;
}

} // namespace rforge
