#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rforge/graph.hpp"
#include "rforge/log_value.hpp"
#include "rforge/solve.hpp"
#include "rforge/three_graph.hpp"

namespace rforge {

// Total coloring of ordered pairs over [N] by palette vertices. values is a
// dense N*N row-major table; the diagonal holds the sentinel -1.
class PairColoring {
public:
    PairColoring(int n_points, int palette_size)
        : n_(n_points), m_(palette_size), values_(size_t(n_points) * n_points, -1) {
        if (n_points < 1 || palette_size < 1)
            throw DomainError("PairColoring: need points and palette nonempty");
    }

    int points() const { return n_; }
    int palette_size() const { return m_; }

    int color(int a, int b) const { return values_[size_t(a) * n_ + b]; }

    void set_color(int a, int b, int c) {
        if (a == b) throw DomainError("PairColoring: diagonal is reserved");
        if (c < 0 || c >= m_) throw DomainError("PairColoring: color out of range");
        values_[size_t(a) * n_ + b] = c;
    }

    const std::vector<int>& raw() const { return values_; }

private:
    int n_, m_;
    std::vector<int> values_;
};

PairColoring random_coloring(int n_points, int palette_size, uint64_t seed);

// The defining predicate: i<j<k spans an adjacent triangle when the colors
// seen from each corner toward the other two are palette-adjacent.
bool is_adjacent_triangle(const PairColoring& chi, const Graph& palette,
                          int i, int j, int k);

// 3-graph of all adjacent triangles of chi.
ThreeGraph build_gamma(const PairColoring& chi, const Graph& palette);

// Single-condition comparison variant: only the first corner's condition.
// Always a supergraph of build_gamma's result.
ThreeGraph build_gamma_cfs(const PairColoring& chi, const Graph& palette);

// Probability that a uniform coloring makes {i,j,k} an adjacent triangle:
// cube of the ordered-pair adjacency density 2|E|/m^2.
double adjacent_triangle_probability(const Graph& palette);

struct LinkFreeResult {
    bool free = true;
    int vertex = -1;           // witness vertex whose link contains the pattern
    std::vector<int> mapping;  // pattern vertex -> host vertex
};

// True iff no vertex's link contains the forbidden graph as a subgraph.
LinkFreeResult verify_link_free(const ThreeGraph& gamma, const Graph& forbidden,
                                const SearchLimits& limits = kDefaultLimits);

enum class HoleStatus { Found, Absent, NotDecided };

struct HoleResult {
    HoleStatus status = HoleStatus::NotDecided;
    std::array<std::vector<int>, 3> parts;
};

// Three disjoint n-sets spanning no crossing triple. Exhaustive (able to
// certify absence) up to `exhaustive_limit` vertices; beyond that a greedy
// randomized hunt that can only return Found or NotDecided.
HoleResult find_tripartite_hole(const ThreeGraph& gamma, int n,
                                int exhaustive_limit = 24, uint64_t seed = 0);

struct HoleProbability {
    double estimate = 0.0;     // Monte Carlo over palettes and colorings
    LogValue bound;            // closed-form tail bound, vacuous at small scale
    bool within = false;       // estimate <= bound
    int trials = 0;
};

// Probability that a fixed tripartition of 3n fresh points spans no adjacent
// triangle when the palette is G(m,p) and the coloring uniform. The bound is
//   (1-p^3)^(d*(3n)^3/2) + (2e(3n)^2/(d*m))^(d*(3n)^2/2),  d = 1/27.
HoleProbability estimate_hole_probability(int m, double p, int n, int trials,
                                          uint64_t seed);

LogValue hole_probability_bound(int m, double p, int n);

} // namespace rforge
