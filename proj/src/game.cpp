#include "rforge/game.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "json.hpp"
#include "rforge/solve.hpp"

namespace rforge {

int GameState::add_vertex() {
    if (vertices_ >= limits_.max_vertices)
        throw LimitExceeded("game: vertex cap " + std::to_string(limits_.max_vertices));
    red_into_.emplace_back();
    moves_.push_back({-1, EdgeColor::None});
    return vertices_++;
}

EdgeColor GameState::color(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= vertices_ || b >= vertices_)
        throw DomainError("game: bad edge endpoints");
    auto it = colors_.find({std::max(a, b), std::min(a, b)});
    return it == colors_.end() ? EdgeColor::None : it->second;
}

void GameState::set_color(int from, int to, EdgeColor c) {
    if (to < 0 || to >= from || from >= vertices_)
        throw DomainError("game: edge must run from the newest vertex back");
    if (c == EdgeColor::None) throw DomainError("game: painter must pick a color");
    if (edge_count() >= limits_.max_edges)
        throw LimitExceeded("game: edge cap " + std::to_string(limits_.max_edges));
    if (!colors_.emplace(std::make_pair(from, to), c).second)
        throw DomainError("game: edge already colored");
    if (c == EdgeColor::Red) {
        red_into_[to].push_back(from);
        ++red_total_;
    } else {
        blue_edges_.push_back({to, from});
        ++blue_total_;
    }
    moves_.push_back({to, c});
}

const std::vector<int>& GameState::red_sources(int center) const {
    if (center < 0 || center >= vertices_) throw DomainError("game: bad center");
    return red_into_[center];
}

Graph GameState::blue_graph() const { return Graph(vertices_, blue_edges_); }

CliqueStarBuilder::CliqueStarBuilder(int s, int n) : s_(s), n_(n) {
    if (s < 3 || n < 3) throw DomainError("builder: need s, n >= 3");
}

int CliqueStarBuilder::next(const GameState& st) {
    if (pending_ < 0) {
        if (st.vertices() == seen_) return -1;
        seen_ = st.vertices();
        pending_ = seen_ - 1;
        cursor_ = 0;
    }
    while (true) {
        if (cursor_ == u_.size()) {
            u_.push_back(pending_);
            pending_ = -1;
            return -1;
        }
        EdgeColor c = st.color(pending_, u_[cursor_]);
        if (c == EdgeColor::None) return u_[cursor_];
        if (c == EdgeColor::Blue) {
            ++cursor_;
            continue;
        }
        pending_ = -1; // first red: this vertex stays matched, move on
        return -1;
    }
}

namespace {

struct WinCheck {
    bool won = false;
    bool red = false;
    std::vector<int> witness;
};

// A red edge can only complete a red star, a blue edge only a blue clique,
// so only the side of the last move needs scanning.
WinCheck detect_win(const GameState& st, int s, int n, EdgeColor last) {
    WinCheck w;
    if (last == EdgeColor::Red) {
        for (int u = 0; u < st.vertices(); ++u) {
            const auto& src = st.red_sources(u);
            if (int(src.size()) >= s - 1) {
                w.won = true;
                w.red = true;
                w.witness.push_back(u);
                w.witness.insert(w.witness.end(), src.begin(), src.begin() + (s - 1));
                return w;
            }
        }
        return w;
    }
    Graph blue = st.blue_graph();
    auto clique = independence_number(blue.complement());
    if (clique.value >= n - 1) {
        w.won = true;
        w.witness.assign(clique.witness.begin(), clique.witness.begin() + (n - 1));
    }
    return w;
}

} // namespace

GameResult play_game(int s, int n, Builder& builder, Painter& painter,
                     GameLimits limits) {
    if (s < 3 || n < 3) throw DomainError("play_game: need s, n >= 3");
    GameState st(limits);
    while (true) {
        int to = builder.next(st);
        if (to < 0) {
            int id = st.add_vertex();
            painter.on_new_vertex(st, id);
            continue;
        }
        int from = st.vertices() - 1;
        EdgeColor c = painter.paint(st, from, to);
        st.set_color(from, to, c);
        WinCheck w = detect_win(st, s, n, c);
        if (w.won) {
            GameResult r;
            r.s = s;
            r.n = n;
            r.red_win = w.red;
            r.witness = w.witness;
            r.transcript = st.moves();
            r.vertices = st.vertices();
            r.red_edges = st.red_count();
            r.total_edges = st.edge_count();
            return r;
        }
    }
}

bool certify_outcome(const GameResult& r) {
    int vertices = 0, red = 0;
    int64_t total = 0;
    std::map<std::pair<int, int>, EdgeColor> colors;
    for (const auto& mv : r.transcript) {
        if (mv.to < 0) {
            if (mv.color != EdgeColor::None) return false;
            ++vertices;
            continue;
        }
        int from = vertices - 1;
        if (mv.to >= from || mv.color == EdgeColor::None) return false;
        if (!colors.emplace(std::make_pair(from, mv.to), mv.color).second) return false;
        ++total;
        if (mv.color == EdgeColor::Red) ++red;
    }
    if (vertices != r.vertices || red != r.red_edges || total != r.total_edges)
        return false;

    std::set<int> distinct(r.witness.begin(), r.witness.end());
    if (distinct.size() != r.witness.size()) return false;
    for (int v : r.witness)
        if (v < 0 || v >= vertices) return false;

    if (r.red_win) {
        if (int(r.witness.size()) != r.s) return false;
        int center = r.witness[0];
        for (size_t i = 1; i < r.witness.size(); ++i) {
            int leaf = r.witness[i];
            if (leaf <= center) return false; // the center precedes every leaf
            auto it = colors.find({leaf, center});
            if (it == colors.end() || it->second != EdgeColor::Red) return false;
        }
    } else {
        if (int(r.witness.size()) != r.n - 1) return false;
        for (size_t i = 0; i < r.witness.size(); ++i)
            for (size_t j = i + 1; j < r.witness.size(); ++j) {
                int a = std::max(r.witness[i], r.witness[j]);
                int b = std::min(r.witness[i], r.witness[j]);
                auto it = colors.find({a, b});
                if (it == colors.end() || it->second != EdgeColor::Blue) return false;
            }
    }
    return true;
}

GameResult replay_transcript(int s, int n, const std::vector<GameMove>& transcript) {
    std::vector<EdgeColor> script;
    for (const auto& mv : transcript)
        if (mv.to >= 0) script.push_back(mv.color);
    CliqueStarBuilder builder(s, n);
    ScriptedPainter painter(std::move(script));
    return play_game(s, n, builder, painter);
}

std::string transcript_to_json(const GameResult& r) {
    nlohmann::json events = nlohmann::json::array();
    int vertices = 0;
    for (const auto& mv : r.transcript) {
        if (mv.to < 0) {
            events.push_back({{"type", "vertex"}});
            ++vertices;
        } else {
            events.push_back({{"type", "edge"},
                              {"from", vertices - 1},
                              {"to", mv.to},
                              {"color", mv.color == EdgeColor::Red ? "red" : "blue"}});
        }
    }
    nlohmann::json j = {{"s", r.s},
                        {"n", r.n},
                        {"red_win", r.red_win},
                        {"witness", r.witness},
                        {"events", std::move(events)},
                        {"vertices", r.vertices},
                        {"red_edges", r.red_edges},
                        {"total_edges", r.total_edges}};
    return j.dump(2) + "\n";
}

GameResult transcript_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("transcript: ") + e.what());
    }
    try {
        GameResult r;
        r.s = j.at("s").get<int>();
        r.n = j.at("n").get<int>();
        r.red_win = j.at("red_win").get<bool>();
        r.witness = j.at("witness").get<std::vector<int>>();
        r.vertices = j.at("vertices").get<int>();
        r.red_edges = j.at("red_edges").get<int>();
        r.total_edges = j.at("total_edges").get<int64_t>();
        int vertices = 0;
        for (const auto& ev : j.at("events")) {
            std::string type = ev.at("type").get<std::string>();
            if (type == "vertex") {
                r.transcript.push_back({-1, EdgeColor::None});
                ++vertices;
            } else if (type == "edge") {
                if (ev.at("from").get<int>() != vertices - 1)
                    throw DomainError("transcript: edge not from the newest vertex");
                std::string color = ev.at("color").get<std::string>();
                if (color != "red" && color != "blue")
                    throw DomainError("transcript: bad color " + color);
                r.transcript.push_back(
                    {ev.at("to").get<int>(),
                     color == "red" ? EdgeColor::Red : EdgeColor::Blue});
            } else {
                throw DomainError("transcript: bad event type " + type);
            }
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("transcript: ") + e.what());
    }
}

GameCaps clique_star_caps(int s, int n) {
    if (s < 3 || n < 3) throw DomainError("caps: need s, n >= 3");
    GameCaps c;
    c.vertices = n - 1 + (s - 2) * (n - 2);
    c.red_edges = (s - 2) * (n - 2) + 1;
    c.total_edges = (s - 1) * ((n - 1) * (n - 2) / 2);
    return c;
}

bool within_caps(const GameResult& r, const GameCaps& c) {
    return r.vertices <= c.vertices && r.red_edges <= c.red_edges &&
           r.total_edges <= c.total_edges;
}

namespace {

struct PrefixProbe {
    bool complete = false;
    bool lost = false;
    GameResult result;
};

PrefixProbe play_prefix(int s, int n, const std::vector<EdgeColor>& script,
                        const GameCaps& caps) {
    CliqueStarBuilder builder(s, n);
    ScriptedPainter painter(script);
    GameLimits lim;
    lim.max_vertices = caps.vertices + 2;
    lim.max_edges = caps.total_edges + 2;
    PrefixProbe probe;
    try {
        probe.result = play_game(s, n, builder, painter, lim);
        probe.complete = true;
    } catch (const ScriptedPainter::ScriptExhausted&) {
        // the painter's decision tree branches here
    } catch (const LimitExceeded&) {
        probe.lost = true;
    }
    return probe;
}

} // namespace

SweepReport sweep_all_painters(int s, int n) {
    GameCaps caps = clique_star_caps(s, n);
    if (caps.total_edges > 20)
        throw SizeLimitExceeded("sweep: decision tree 2^" +
                                std::to_string(caps.total_edges));
    SweepReport rep;
    rep.builder_always_wins = true;
    std::vector<EdgeColor> script;
    std::function<void()> dfs = [&]() {
        PrefixProbe probe = play_prefix(s, n, script, caps);
        if (probe.complete) {
            ++rep.leaves;
            rep.max_vertices = std::max(rep.max_vertices, probe.result.vertices);
            rep.max_red = std::max(rep.max_red, probe.result.red_edges);
            rep.max_edges = std::max(rep.max_edges, probe.result.total_edges);
            if (!within_caps(probe.result, caps)) ++rep.cap_violations;
            return;
        }
        if (probe.lost || int(script.size()) >= caps.total_edges) {
            // the builder failed to win within its own caps
            ++rep.leaves;
            ++rep.cap_violations;
            rep.builder_always_wins = false;
            return;
        }
        for (EdgeColor c : {EdgeColor::Red, EdgeColor::Blue}) {
            script.push_back(c);
            dfs();
            script.pop_back();
        }
    };
    dfs();
    if (rep.cap_violations > 0) rep.builder_always_wins = false;
    return rep;
}

HostThresholdPainter::HostThresholdPainter(const ThreeGraph& host_red,
                                           uint64_t alpha_num, uint64_t alpha_den)
    : host_(&host_red), num_(alpha_num), den_(alpha_den) {
    if (num_ == 0 || den_ < 2 * num_)
        throw DomainError("painter: alpha must lie in (0, 1/2]");
    candidates_.resize(host_red.vertex_count());
    for (int i = 0; i < host_red.vertex_count(); ++i) candidates_[i] = i;
}

int HostThresholdPainter::take_candidate() {
    if (candidates_.empty())
        throw CandidateUnderflow("painter: candidate set exhausted");
    int w = candidates_.front();
    candidates_.erase(candidates_.begin());
    return w;
}

void HostThresholdPainter::on_new_vertex(const GameState&, int id) {
    uint64_t before = candidates_.size();
    int host = take_candidate();
    embedding_.push_back(host);
    if (int(embedding_.size()) != id + 1)
        throw std::logic_error("painter: embedding out of step with the game");
    ledger_.push_back({'v', before, candidates_.size()});
}

EdgeColor HostThresholdPainter::paint(const GameState&, int from, int to) {
    if (candidates_.empty())
        throw CandidateUnderflow("painter: no candidates left to split");
    int a = embedding_[from], b = embedding_[to];
    uint64_t before = candidates_.size();
    std::vector<int> with, without;
    for (int w : candidates_)
        (host_->has_triple(a, b, w) ? with : without).push_back(w);
    bool red = uint64_t(with.size()) * den_ >= before * num_;
    candidates_ = red ? std::move(with) : std::move(without);
    uint64_t after = candidates_.size();
    // The threshold guarantees these splits exactly; a miss is a bug.
    if (red && den_ * after < num_ * before)
        throw std::logic_error("painter: red split below alpha |S|");
    if (!red && den_ * after < (den_ - num_) * before)
        throw std::logic_error("painter: blue split below (1 - alpha) |S|");
    ledger_.push_back({red ? 'r' : 'b', before, after});
    return red ? EdgeColor::Red : EdgeColor::Blue;
}

namespace {

constexpr unsigned __int128 kMax128 = ~static_cast<unsigned __int128>(0);

unsigned __int128 mul128(unsigned __int128 a, uint64_t b) {
    if (b != 0 && a > kMax128 / b)
        throw SizeLimitExceeded("host size formula exceeds 128 bits");
    return a * b;
}

} // namespace

uint64_t required_host_size(int s, int n, uint64_t alpha_num, uint64_t alpha_den) {
    if (alpha_num == 0 || alpha_den < 2 * alpha_num)
        throw DomainError("required_host_size: alpha must lie in (0, 1/2]");
    GameCaps caps = clique_star_caps(s, n);
    unsigned __int128 numerator = uint64_t(caps.vertices) + 1;
    for (int i = 0; i < caps.total_edges; ++i) numerator = mul128(numerator, alpha_den);
    unsigned __int128 denominator = 1;
    for (int i = 0; i < caps.red_edges; ++i) denominator = mul128(denominator, alpha_num);
    for (int i = 0; i < caps.total_edges - caps.red_edges; ++i)
        denominator = mul128(denominator, alpha_den - alpha_num);
    unsigned __int128 size = (numerator + denominator - 1) / denominator;
    if (size > static_cast<unsigned __int128>(~uint64_t(0)))
        throw SizeLimitExceeded("required host size exceeds 64 bits");
    return uint64_t(size);
}

ReductionResult reduce_on_host(const ThreeGraph& host_red, int s, int n,
                               uint64_t alpha_num, uint64_t alpha_den) {
    uint64_t required = required_host_size(s, n, alpha_num, alpha_den);
    if (uint64_t(host_red.vertex_count()) < required)
        throw HostTooSmall("reduce_on_host: host has " +
                           std::to_string(host_red.vertex_count()) + " vertices, needs " +
                           std::to_string(required));
    CliqueStarBuilder builder(s, n);
    HostThresholdPainter painter(host_red, alpha_num, alpha_den);

    ReductionResult out;
    out.required_hosts = required;
    out.game = play_game(s, n, builder, painter);
    out.embedding = painter.embedding();
    out.red = out.game.red_win;
    // One surviving candidate closes the witness on either side.
    int fresh = painter.take_candidate();
    for (int v : out.game.witness) out.witness.push_back(out.embedding[v]);
    out.witness.push_back(fresh);
    out.ledger = painter.ledger();
    out.certified = certify_reduction(host_red, out, s, n);
    return out;
}

bool certify_reduction(const ThreeGraph& host_red, const ReductionResult& r,
                       int s, int n) {
    const auto& w = r.witness;
    std::set<int> distinct(w.begin(), w.end());
    if (distinct.size() != w.size()) return false;
    for (int v : w)
        if (v < 0 || v >= host_red.vertex_count()) return false;
    if (r.red) {
        if (int(w.size()) != s + 1) return false;
        for (size_t i = 1; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                if (!host_red.has_triple(w[0], w[i], w[j])) return false;
    } else {
        if (int(w.size()) != n) return false;
        for (size_t i = 0; i < w.size(); ++i)
            for (size_t j = i + 1; j < w.size(); ++j)
                for (size_t k = j + 1; k < w.size(); ++k)
                    if (host_red.has_triple(w[i], w[j], w[k])) return false;
    }
    return true;
}

UpperEval ramsey_upper_eval(int s, int n) {
    GameCaps caps = clique_star_caps(s, n);
    double log_n = std::log(double(n));
    double raw = std::log(double(caps.vertices) + 1.0) + caps.red_edges * log_n +
                 double(caps.red_edges - caps.total_edges) *
                     (std::log(double(n) - 1.0) - log_n);
    UpperEval ev;
    ev.raw = LogValue::from_log(raw);
    ev.cap = LogValue::from_log(double(s) * n * std::log(2.0 * n));
    ev.raw_le_cap = !(ev.cap < ev.raw);
    return ev;
}

} // namespace rforge
