#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rforge/errors.hpp"
#include "rforge/graph.hpp"
#include "rforge/log_value.hpp"
#include "rforge/rng.hpp"
#include "rforge/three_graph.hpp"

namespace rforge {

// Vertex-revealing game. Builder presents vertices one at a time; each new
// vertex may draw edges back to earlier vertices, in the order Builder
// chooses, and Painter colors every edge the moment it is drawn. Builder
// hunts a red star whose center precedes all its leaves (s-1 red edges into
// one vertex) or a blue clique on n-1 vertices.

enum class EdgeColor : uint8_t { None, Red, Blue };

struct GameLimits {
    int max_vertices = 10000;
    int64_t max_edges = 1000000;
};

// One protocol step. to < 0 presents a fresh vertex; otherwise an edge from
// the newest vertex back to `to`, carrying the painter's color.
struct GameMove {
    int to = -1;
    EdgeColor color = EdgeColor::None;

    bool operator==(const GameMove&) const = default;
};

class GameState {
public:
    explicit GameState(GameLimits limits = {}) : limits_(limits) {}

    int vertices() const { return vertices_; }
    int64_t edge_count() const { return int64_t(red_total_) + blue_total_; }
    int red_count() const { return red_total_; }
    int blue_count() const { return blue_total_; }

    int add_vertex();
    EdgeColor color(int a, int b) const;
    void set_color(int from, int to, EdgeColor c);

    const std::vector<GameMove>& moves() const { return moves_; }

    // Red edges drawn into `center` from later vertices, in arrival order.
    const std::vector<int>& red_sources(int center) const;
    Graph blue_graph() const;

private:
    GameLimits limits_;
    int vertices_ = 0;
    int red_total_ = 0, blue_total_ = 0;
    std::map<std::pair<int, int>, EdgeColor> colors_; // key (from, to), from > to
    std::vector<std::vector<int>> red_into_;
    std::vector<std::pair<int, int>> blue_edges_;
    std::vector<GameMove> moves_;
};

class Builder {
public:
    virtual ~Builder() = default;
    // Earlier endpoint for the next edge from the newest vertex, or -1 to
    // present a fresh vertex.
    virtual int next(const GameState& st) = 0;
};

class Painter {
public:
    virtual ~Painter() = default;
    virtual EdgeColor paint(const GameState& st, int from, int to) = 0;
    // Called right after a vertex is presented.
    virtual void on_new_vertex(const GameState& st, int id) { (void)st; (void)id; }
};

// Builder strategy: maintain a blue clique U. Every fresh vertex draws to all
// of U in order and stops at its first red edge; an all-blue vertex joins U.
// Red edges therefore point from later vertices into U, so any U-vertex
// collecting s-1 of them is a red star center, and U reaching n-1 is the
// blue clique.
class CliqueStarBuilder : public Builder {
public:
    CliqueStarBuilder(int s, int n);
    int next(const GameState& st) override;
    const std::vector<int>& clique() const { return u_; }

private:
    int s_, n_;
    std::vector<int> u_;
    int pending_ = -1;
    size_t cursor_ = 0;
    int seen_ = 0;
};

class AllRedPainter : public Painter {
public:
    EdgeColor paint(const GameState&, int, int) override { return EdgeColor::Red; }
};

class AllBluePainter : public Painter {
public:
    EdgeColor paint(const GameState&, int, int) override { return EdgeColor::Blue; }
};

class RandomPainter : public Painter {
public:
    explicit RandomPainter(uint64_t seed) : rng_(seed) {}
    EdgeColor paint(const GameState&, int, int) override {
        return rng_.below(2) == 0 ? EdgeColor::Red : EdgeColor::Blue;
    }

private:
    Rng rng_;
};

// Replays a fixed color sequence; throws ScriptExhausted past the end.
class ScriptedPainter : public Painter {
public:
    struct ScriptExhausted {};

    explicit ScriptedPainter(std::vector<EdgeColor> script) : script_(std::move(script)) {}
    EdgeColor paint(const GameState&, int, int) override {
        if (used_ == script_.size()) throw ScriptExhausted{};
        return script_[used_++];
    }
    size_t used() const { return used_; }

private:
    std::vector<EdgeColor> script_;
    size_t used_ = 0;
};

struct GameResult {
    int s = 0, n = 0;
    bool red_win = false;               // false: blue clique win
    std::vector<int> witness;           // red: center then s-1 sources; blue: n-1 clique vertices
    std::vector<GameMove> transcript;
    int vertices = 0, red_edges = 0;
    int64_t total_edges = 0;
};

GameResult play_game(int s, int n, Builder& builder, Painter& painter,
                     GameLimits limits = {});

// Rebuilds the colored graph from the transcript alone and re-checks the
// witness edge by edge. Shares no state with play_game's detection.
bool certify_outcome(const GameResult& r);

// Replays the recorded colors against a fresh CliqueStarBuilder; the result
// must reproduce the transcript exactly.
GameResult replay_transcript(int s, int n, const std::vector<GameMove>& transcript);

std::string transcript_to_json(const GameResult& r);
GameResult transcript_from_json(const std::string& text);

// Worst-case resources of CliqueStarBuilder against any painter.
struct GameCaps {
    int vertices = 0;
    int red_edges = 0;
    int total_edges = 0;
};

GameCaps clique_star_caps(int s, int n);

bool within_caps(const GameResult& r, const GameCaps& c);

// Exhaustive walk of the painter's decision tree. builder_always_wins is the
// game's minimax value for the clique-star builder.
struct SweepReport {
    bool builder_always_wins = false;
    uint64_t leaves = 0;
    uint64_t cap_violations = 0;
    int max_vertices = 0, max_red = 0;
    int64_t max_edges = 0;
};

SweepReport sweep_all_painters(int s, int n);

// Host-driven reduction. The painter below tracks a candidate set S of host
// vertices consistent with every colored edge: a red edge (i,j) keeps the w
// with host triple {x_i, x_j, w} present, a blue edge keeps the rest. Red is
// chosen exactly when count * den >= |S| * num.
struct LedgerEntry {
    char kind = 'v';   // 'v' vertex pick, 'r' red edge, 'b' blue edge
    uint64_t before = 0, after = 0;
};

class HostThresholdPainter : public Painter {
public:
    HostThresholdPainter(const ThreeGraph& host_red, uint64_t alpha_num,
                         uint64_t alpha_den);
    void on_new_vertex(const GameState& st, int id) override;
    EdgeColor paint(const GameState& st, int from, int to) override;

    const std::vector<int>& embedding() const { return embedding_; }
    const std::vector<int>& candidates() const { return candidates_; }
    const std::vector<LedgerEntry>& ledger() const { return ledger_; }
    // Pops the lowest surviving candidate; CandidateUnderflow when none left.
    int take_candidate();

private:
    const ThreeGraph* host_;
    uint64_t num_, den_;
    std::vector<int> embedding_;
    std::vector<int> candidates_;
    std::vector<LedgerEntry> ledger_;
};

// Smallest host size the reduction is guaranteed on: for the clique-star
// caps (v, r, m), ceil((v+1) * den^m / (num^r * (den-num)^(m-r))).
uint64_t required_host_size(int s, int n, uint64_t alpha_num, uint64_t alpha_den);

struct ReductionResult {
    GameResult game;
    std::vector<int> embedding;   // game vertex id -> host vertex
    bool red = false;
    // Host ids. Red: apex first, then the s vertices whose pairs all form
    // red triples with the apex. Blue: n vertices spanning no red triple.
    std::vector<int> witness;
    bool certified = false;
    uint64_t required_hosts = 0;
    std::vector<LedgerEntry> ledger;
};

ReductionResult reduce_on_host(const ThreeGraph& host_red, int s, int n,
                               uint64_t alpha_num, uint64_t alpha_den);

// Direct triple-membership check of a reduction witness.
bool certify_reduction(const ThreeGraph& host_red, const ReductionResult& r,
                       int s, int n);

// Reduction host size with alpha = 1/n against the (2n)^(sn) cap.
struct UpperEval {
    LogValue raw, cap;
    bool raw_le_cap = false;
};

UpperEval ramsey_upper_eval(int s, int n);

} // namespace rforge
