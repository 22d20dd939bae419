#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "rforge/aux_graph.hpp"
#include "rforge/bounds.hpp"
#include "rforge/census.hpp"
#include "rforge/game.hpp"
#include "rforge/gamma.hpp"
#include "rforge/json_io.hpp"
#include "rforge/pipeline.hpp"
#include "rforge/solve.hpp"

namespace {

using nlohmann::json;
using namespace rforge;

// Exit codes: 0 clean, 1 a certified property failed, 2 usage or limits.
constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kUsage = 2;

struct Output {
    std::string path;   // empty: stdout
    std::string format; // "json" or "csv"
};

void emit(const Output& out, const json& report,
          const std::vector<std::string>& csv_lines) {
    std::string payload;
    if (out.format == "csv") {
        std::ostringstream os;
        for (const auto& line : csv_lines) os << line << "\n";
        payload = os.str();
    } else {
        payload = report.dump(2) + "\n";
    }
    if (out.path.empty())
        std::cout << payload;
    else
        save_json(out.path, payload);
}

uint64_t default_seed() {
    const char* env = std::getenv("RAMSEY_FORGE_SEED");
    if (!env || !*env) return 0;
    return std::strtoull(env, nullptr, 10);
}

std::pair<uint64_t, uint64_t> parse_ratio(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        throw DomainError("alpha must be a fraction like 1/3");
    uint64_t num = std::strtoull(text.substr(0, slash).c_str(), nullptr, 10);
    uint64_t den = std::strtoull(text.substr(slash + 1).c_str(), nullptr, 10);
    if (den == 0) throw DomainError("alpha denominator is zero");
    return {num, den};
}

std::string csv_escape(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// Single-row projection of a flat JSON object.
std::vector<std::string> csv_of(const json& row) {
    std::string header, values;
    for (auto it = row.begin(); it != row.end(); ++it) {
        if (!header.empty()) {
            header += ',';
            values += ',';
        }
        header += it.key();
        values += csv_escape(it.value());
    }
    return {header, values};
}

int cmd_auxgraph(int g, int m, int t, double p, int attempts, uint64_t seed,
                 const Output& out) {
    AuxParams params;
    params.g = g;
    params.m = m;
    if (t > 0) params.t = t;
    if (p >= 0) params.p = p;
    params.attempts = attempts;
    AuxResult res = construct_auxiliary(params, seed);

    json cert = {{"girth_ok", res.certificate.girth_ok},
                 {"alpha2", res.certificate.alpha2},
                 {"deletions_cycles", res.certificate.deletions_cycles},
                 {"deletions_bisets", res.certificate.deletions_bisets},
                 {"attempts_used", res.certificate.attempts_used},
                 {"property2_ok", res.certificate.property2_ok},
                 {"property3_ok", res.certificate.property3_ok},
                 {"property2_mode", res.certificate.property2_mode},
                 {"property3_mode", res.certificate.property3_mode},
                 {"notes", res.certificate.notes},
                 {"seed", seed}};
    if (res.certificate.girth)
        cert["girth"] = *res.certificate.girth;
    else
        cert["girth"] = nullptr;

    if (!out.path.empty()) {
        save_json(out.path, to_json(res.graph));
        std::string cert_path = out.path + ".cert.json";
        save_json(cert_path, cert.dump(2) + "\n");
        std::cerr << "palette -> " << out.path << ", certificate -> " << cert_path
                  << "\n";
    } else {
        json combined = {{"graph", json::parse(to_json(res.graph))},
                         {"certificate", cert}};
        emit(out, combined, csv_of(cert));
    }
    return res.certificate.girth_ok ? kOk : kPropertyFailed;
}

int cmd_gamma_build(int N, const std::string& palette_path, uint64_t seed,
                    const std::string& chi_out, const Output& out) {
    Graph palette = load_graph(palette_path);
    PairColoring chi = random_coloring(N, palette.vertex_count(), seed);
    ThreeGraph gamma = build_gamma(chi, palette);
    if (!chi_out.empty()) {
        json jchi = {{"N", N}, {"m", palette.vertex_count()}, {"values", chi.raw()}};
        save_json(chi_out, jchi.dump() + "\n");
    }
    if (!out.path.empty()) {
        save_json(out.path, to_json(gamma));
    } else {
        json report = {{"N", N},
                       {"seed", seed},
                       {"palette", palette_path},
                       {"triples", gamma.triple_count()},
                       {"graph", json::parse(to_json(gamma))}};
        emit(out, report, csv_of({{"N", N}, {"triples", gamma.triple_count()}}));
    }
    return kOk;
}

int cmd_gamma_verify(const std::string& gamma_path, const std::string& forbidden_path,
                     const Output& out) {
    ThreeGraph gamma = load_three_graph(gamma_path);
    Graph forbidden = load_graph(forbidden_path);
    LinkFreeResult res = verify_link_free(gamma, forbidden);
    json report = {{"free", res.free}, {"mode", "exhaustive"}};
    if (!res.free) {
        report["violating_vertex"] = res.vertex;
        report["mapping"] = res.mapping;
    }
    emit(out, report, csv_of(report));
    return res.free ? kOk : kPropertyFailed;
}

int cmd_gamma_hole(const std::string& gamma_path, int n, const std::string& mode,
                   int limit_exact, uint64_t seed, const Output& out) {
    ThreeGraph gamma = load_three_graph(gamma_path);
    int limit = mode == "exhaustive" ? std::max(limit_exact, gamma.vertex_count()) : limit_exact;
    HoleResult res = find_tripartite_hole(gamma, n, limit, seed);
    const char* status = res.status == HoleStatus::Found     ? "found"
                         : res.status == HoleStatus::Absent ? "absent"
                                                            : "not_decided";
    json report = {{"n", n},
                   {"status", status},
                   {"mode", gamma.vertex_count() <= limit ? "exhaustive" : "sampled"}};
    if (res.status == HoleStatus::Found)
        report["parts"] = {res.parts[0], res.parts[1], res.parts[2]};
    emit(out, report, csv_of({{"n", n}, {"status", status}}));
    return kOk;
}

int cmd_census(int n, const std::string& palette_path, int g, double c,
               bool verify_products, const Output& out) {
    Graph palette = load_graph(palette_path);
    CensusReport census = census_vs_bound(n, palette, g, c);
    FamilyClassification fams = classify_families(n, palette, g, c);

    uint64_t product_checked = 0, product_failures = 0;
    if (verify_products) {
        for_each_census_member(n, palette, [&](const TripartiteColoring& chi) {
            ++product_checked;
            if (!check_product_formula_E3(chi, palette).equal) ++product_failures;
            if (!check_hom_product_formula(chi, palette).equal) ++product_failures;
            return true;
        });
    }

    json report = {{"n", n},
                   {"palette_vertices", palette.vertex_count()},
                   {"count", census.count},
                   {"bound_log", census.bound.log()},
                   {"log_ratio", census.log_ratio},
                   {"f1_members", fams.f1_members},
                   {"f3_members", fams.f3_members},
                   {"f2_vacuous", fams.f2_vacuous},
                   {"family_bound_log", fams.family_bound.log()},
                   {"verification", "exhaustive"}};
    if (verify_products) {
        report["product_checked"] = product_checked;
        report["product_failures"] = product_failures;
    }
    emit(out, report, csv_of(report));
    return product_failures == 0 ? kOk : kPropertyFailed;
}

int cmd_game_play(int s, int n, const std::string& painter_name, uint64_t seed,
                  const Output& out) {
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

    GameResult res = play_game(s, n, builder, *painter);
    GameCaps caps = clique_star_caps(s, n);
    bool ok = certify_outcome(res) && within_caps(res, caps);
    json report = json::parse(transcript_to_json(res));
    report["certified"] = ok;
    report["caps"] = {{"vertices", caps.vertices},
                      {"red_edges", caps.red_edges},
                      {"total_edges", caps.total_edges}};
    emit(out, report,
         csv_of({{"s", s},
                 {"n", n},
                 {"red_win", res.red_win},
                 {"vertices", res.vertices},
                 {"red_edges", res.red_edges},
                 {"total_edges", res.total_edges},
                 {"certified", ok}}));
    return ok ? kOk : kPropertyFailed;
}

int cmd_game_reduce(const std::string& host_path, int s, int n,
                    const std::string& alpha, const Output& out) {
    ThreeGraph host = load_three_graph(host_path);
    auto [num, den] = parse_ratio(alpha);
    ReductionResult res = reduce_on_host(host, s, n, num, den);
    json ledger = json::array();
    for (const auto& e : res.ledger)
        ledger.push_back({{"kind", std::string(1, e.kind)},
                          {"before", e.before},
                          {"after", e.after}});
    json report = {{"s", s},
                   {"n", n},
                   {"alpha", alpha},
                   {"required_hosts", res.required_hosts},
                   {"host_vertices", host.vertex_count()},
                   {"found", res.red ? "red_link_clique" : "blue_hole"},
                   {"witness", res.witness},
                   {"certified", res.certified},
                   {"game_vertices", res.game.vertices},
                   {"game_red_edges", res.game.red_edges},
                   {"game_total_edges", res.game.total_edges},
                   {"ledger", std::move(ledger)}};
    emit(out, report,
         csv_of({{"s", s},
                 {"n", n},
                 {"found", res.red ? "red_link_clique" : "blue_hole"},
                 {"certified", res.certified}}));
    return res.certified ? kOk : kPropertyFailed;
}

int cmd_bounds_eval(const std::string& name, int s, int n, int m, double p,
                    double delta, int h, int t, double r, double rfg, double rhg,
                    int mblow, int trend_s, const Output& out) {
    json report;
    bool ok = true;
    if (name == "l31") {
        LowerBoundReport rep = lower_bound_l31(m, p, n, delta);
        report = {{"name", name},
                  {"value_log", rep.value.log()},
                  {"m_branch_min_log", rep.m_branch_min.log()},
                  {"branch_chromatic_log", rep.branch_chromatic.log()},
                  {"branch_density_log", rep.branch_density.log()}};
    } else if (name == "appendix") {
        AppendixReport rep = appendix_eval(s, n);
        report = {{"name", name},
                  {"log_m", rep.log_m},
                  {"p", rep.p},
                  {"one_minus_p3", rep.one_minus_p3},
                  {"branch_chromatic_log", rep.branch_chromatic.log()},
                  {"branch_density_log", rep.branch_density.log()},
                  {"min_branch_log", rep.min_branch.log()},
                  {"s_le_10n", rep.s_le_10n},
                  {"p_in_unit", rep.p_in_unit},
                  {"one_minus_p3_bounded", rep.one_minus_p3_bounded}};
        ok = rep.p_in_unit && rep.one_minus_p3_bounded;
    } else if (name == "blowup") {
        report = {{"name", name},
                  {"value_log", blowup_bound(h, t, LogValue::from_double(r)).log()}};
    } else if (name == "replace") {
        report = {{"name", name},
                  {"value_log", replace_bound(h, LogValue::from_double(rfg),
                                              LogValue::from_double(rhg))
                                    .log()}};
    } else if (name == "linklink") {
        report = {{"name", name}, {"value", link_vs_link_bound(s, n)}};
    } else if (name == "blowuplink") {
        report = {{"name", name},
                  {"value_log", blowup_link_bound(s, n, mblow).log()}};
    } else if (name == "indepedge") {
        report = {{"name", name},
                  {"value_log", indep_edge_bound(h, n, LogValue::from_double(r)).log()}};
    } else if (name == "beta") {
        BetaConstants c = e_recursion_beta();
        RecursionTrend trend = e_recursion_trend(trend_s);
        report = {{"name", name},
                  {"alpha", c.alpha},
                  {"beta", c.beta},
                  {"six_beta", c.six_beta},
                  {"residual", c.residual},
                  {"trend_s", trend.s},
                  {"trend_e", trend.e_value},
                  {"trend_ratio", trend.ratio}};
        ok = c.six_beta > 0.464 && c.six_beta < 0.465 && c.residual < 1e-14;
    } else if (name == "upper") {
        UpperEval ev = ramsey_upper_eval(s, n);
        report = {{"name", name},
                  {"raw_log", ev.raw.log()},
                  {"cap_log", ev.cap.log()},
                  {"raw_le_cap", ev.raw_le_cap}};
        ok = ev.raw_le_cap;
    } else {
        throw DomainError("unknown bound " + name);
    }
    emit(out, report, csv_of(report));
    return ok ? kOk : kPropertyFailed;
}

int cmd_bounds_f3(int N, int s, int t, const Output& out) {
    F3Result res = f3_small(N, s, t);
    json report = {{"N", N},
                   {"s", s},
                   {"t", t},
                   {"value", res.value},
                   {"graphs_checked", res.graphs_checked},
                   {"witness", json::parse(to_json(res.witness))},
                   {"verification", "exhaustive"}};
    emit(out, report,
         csv_of({{"N", N}, {"s", s}, {"t", t}, {"value", res.value}}));
    return kOk;
}

int cmd_pipeline(const PipelineParams& params, const Output& out) {
    json report = run_pipeline(params);
    std::vector<std::string> csv;
    csv.push_back("trial,seed,triples,links_ok,hole,certified,instance");
    for (const auto& t : report["trials"]) {
        std::ostringstream os;
        os << t["trial"] << ',' << t["seed"] << ',' << t["triples"] << ','
           << t["links_ok"] << ',' << t["hole"].get<std::string>() << ','
           << t["certified"] << ',' << t["instance"];
        csv.push_back(os.str());
    }
    emit(out, report, csv);
    return report["link_failures"].get<int>() == 0 ? kOk : kPropertyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and verification lab for triple-system Ramsey problems"};
    app.require_subcommand(1);

    Output out;
    out.format = "json";
    uint64_t seed = default_seed();
    app.add_option("--seed", seed, "global RNG seed (env RAMSEY_FORGE_SEED)")
        ->capture_default_str();
    app.add_option("--out", out.path, "write the report here instead of stdout");
    app.add_option("--format", out.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    int limit_exact = 24;
    app.add_option("--limit-exact", limit_exact,
                   "exhaustive-search vertex ceiling where applicable");
    int trials = 50;
    app.add_option("--trials", trials, "trial count for sampled subcommands");
    int parallel = 1;
    app.add_option("--parallel", parallel, "worker threads for trial loops");

    // auxgraph
    auto* aux = app.add_subcommand("auxgraph", "sample and certify a palette graph");
    int aux_g = 3, aux_m = 12, aux_t = -1, aux_attempts = 64;
    double aux_p = -1;
    aux->add_option("--g", aux_g, "forbid cycles up to this length");
    aux->add_option("--m", aux_m, "target vertex count");
    aux->add_option("--t", aux_t, "crossing-free pair order to destroy");
    aux->add_option("--p", aux_p, "edge probability override");
    aux->add_option("--attempts", aux_attempts, "fresh-seed retries");

    // gamma
    auto* gamma = app.add_subcommand("gamma", "pair-coloring triple systems");
    gamma->require_subcommand(1);
    auto* gbuild = gamma->add_subcommand("build", "color pairs and build the triple system");
    int g_N = 30;
    std::string g_palette, g_chi_out;
    gbuild->add_option("--N", g_N, "points to color");
    gbuild->add_option("--palette", g_palette, "palette graph JSON")->required();
    gbuild->add_option("--chi-out", g_chi_out, "also save the coloring here");
    auto* gverify = gamma->add_subcommand("verify", "certify every link avoids a pattern");
    std::string g_input, g_forbidden;
    gverify->add_option("--input", g_input, "triple-system JSON")->required();
    gverify->add_option("--forbidden", g_forbidden, "pattern graph JSON")->required();
    auto* ghole = gamma->add_subcommand("hole", "hunt a balanced tripartite hole");
    std::string gh_input, gh_mode = "exhaustive";
    int gh_n = 2;
    ghole->add_option("--input", gh_input, "triple-system JSON")->required();
    ghole->add_option("--n", gh_n, "part size");
    ghole->add_option("--mode", gh_mode, "exhaustive|greedy")
        ->check(CLI::IsMember({"exhaustive", "greedy"}));

    // census
    auto* census = app.add_subcommand("census", "triangle-free coloring census");
    int c_n = 1, c_g = 3;
    double c_c = 1e-4;
    std::string c_palette;
    bool c_products = true;
    census->add_option("--n", c_n, "part size");
    census->add_option("--palette", c_palette, "palette graph JSON")->required();
    census->add_option("--g", c_g, "girth parameter in the bound");
    census->add_option("--c", c_c, "small constant in the bound");
    census->add_flag("--verify-products,!--no-verify-products", c_products,
                     "check both product formulas on every member");
    census->add_option("--report", out.format, "json|csv (alias of --format)")
        ->check(CLI::IsMember({"json", "csv"}));

    // game
    auto* game = app.add_subcommand("game", "vertex-revealing builder/painter game");
    game->require_subcommand(1);
    auto* gplay = game->add_subcommand("play", "play the clique-star builder");
    int gp_s = 4, gp_n = 4;
    std::string gp_painter = "random";
    gplay->add_option("--s", gp_s, "red star target size");
    gplay->add_option("--n", gp_n, "blue clique target size");
    gplay->add_option("--painter", gp_painter, "random|all-red|all-blue");
    auto* greduce = game->add_subcommand("reduce", "extract a witness from a host");
    std::string gr_host, gr_alpha = "1/3";
    int gr_s = 3, gr_n = 3;
    greduce->add_option("--host", gr_host, "host triple-system JSON")->required();
    greduce->add_option("--s", gr_s, "red target");
    greduce->add_option("--n", gr_n, "blue target");
    greduce->add_option("--alpha", gr_alpha, "threshold fraction, e.g. 1/3");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "closed-form bound evaluation");
    bounds->require_subcommand(1);
    auto* beval = bounds->add_subcommand("eval", "evaluate a named bound");
    std::string b_name;
    int b_s = 3, b_n = 3, b_m = 2, b_h = 3, b_t = 1, b_mblow = 1, b_trend_s = 10000;
    double b_p = 0, b_delta = 1.0 / 27.0, b_r = 1, b_rfg = 1, b_rhg = 1;
    beval->add_option("--name", b_name,
                      "l31|appendix|blowup|replace|linklink|blowuplink|indepedge|beta|upper")
        ->required();
    beval->add_option("--s", b_s);
    beval->add_option("--n", b_n);
    beval->add_option("--m", b_m);
    beval->add_option("--p", b_p);
    beval->add_option("--delta", b_delta);
    beval->add_option("--hv", b_h, "pattern vertex count for composition bounds");
    beval->add_option("--t", b_t);
    beval->add_option("--r", b_r);
    beval->add_option("--rfg", b_rfg);
    beval->add_option("--rhg", b_rhg);
    beval->add_option("--mblow", b_mblow);
    beval->add_option("--trend-s", b_trend_s);
    auto* bf3 = bounds->add_subcommand("f3", "exhaustive small extremal value");
    int f_N = 4, f_s = 4, f_t = 3;
    bf3->add_option("--N", f_N)->required();
    bf3->add_option("--s", f_s)->required();
    bf3->add_option("--t", f_t)->required();

    // pipeline
    auto* pipe = app.add_subcommand("pipeline", "palette -> coloring -> certification run");
    PipelineParams pp;
    std::string pp_palette;
    int pp_t = -1;
    pipe->add_option("--g", pp.g);
    pipe->add_option("--m", pp.m);
    pipe->add_option("--t", pp_t, "biset order for palette construction");
    pipe->add_option("--N", pp.N);
    pipe->add_option("--n", pp.n);
    pipe->add_option("--palette", pp_palette, "use this palette instead of constructing");

    // Let --seed/--out/--format and friends appear after the subcommand too.
    std::function<void(CLI::App*)> allow_globals = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](CLI::App*) { return true; })) {
            sub->fallthrough();
            allow_globals(sub);
        }
    };
    allow_globals(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*aux) return cmd_auxgraph(aux_g, aux_m, aux_t, aux_p, aux_attempts, seed, out);
        if (*gbuild) return cmd_gamma_build(g_N, g_palette, seed, g_chi_out, out);
        if (*gverify) return cmd_gamma_verify(g_input, g_forbidden, out);
        if (*ghole) return cmd_gamma_hole(gh_input, gh_n, gh_mode, limit_exact, seed, out);
        if (*census) return cmd_census(c_n, c_palette, c_g, c_c, c_products, out);
        if (*gplay) return cmd_game_play(gp_s, gp_n, gp_painter, seed, out);
        if (*greduce) return cmd_game_reduce(gr_host, gr_s, gr_n, gr_alpha, out);
        if (*beval)
            return cmd_bounds_eval(b_name, b_s, b_n, b_m, b_p, b_delta, b_h, b_t, b_r,
                                   b_rfg, b_rhg, b_mblow, b_trend_s, out);
        if (*bf3) return cmd_bounds_f3(f_N, f_s, f_t, out);
        if (*pipe) {
            pp.trials = trials;
            pp.seed = seed;
            pp.parallel = parallel;
            pp.hole_exhaustive_limit = limit_exact;
            if (pp_t > 0) pp.t = pp_t;
            if (!pp_palette.empty()) pp.palette = load_graph(pp_palette);
            return cmd_pipeline(pp, out);
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const LimitExceeded& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
