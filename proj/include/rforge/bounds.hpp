#pragma once

#include <cstdint>
#include <vector>

#include "rforge/log_value.hpp"
#include "rforge/three_graph.hpp"

namespace rforge {

// Closed-form bound evaluators. Everything Ramsey-sized lives in log space;
// exact integer versions exist only where the value fits 64 bits, as
// cross-check anchors.

// C(a, b) in 64 bits; SizeLimitExceeded past that.
uint64_t binomial_exact(int a, int b);

// log C(a, b) via lgamma.
double log_binomial(int a, int b);

struct LowerBoundReport {
    LogValue value;             // (1/2) * M^(delta n / 2)
    LogValue m_branch_min;      // M = min of the two branches
    LogValue branch_chromatic;  // (1 - p^3)^(-n); log +inf when p = 1
    LogValue branch_density;    // delta m / (2 e n^2)
};

// M = min{(1-p^3)^(-n), delta m/(2 e n^2)}, value = (1/2) M^(delta n/2).
LowerBoundReport lower_bound_l31(int m, double p, int n, double delta);

struct AppendixReport {
    double log_m = 0;           // log of the palette-size target C(n+s,s)^(2/13)
    double p = 0;               // m^(-2/(s-1))
    double one_minus_p3 = 0;
    LogValue m_value;
    LogValue branch_chromatic;  // (1 - p^3)^(-3n)
    LogValue branch_density;    // m / (486 e n^2)
    LogValue min_branch;
    bool s_le_10n = false;
    double log_bound_6_over_s1 = 0;  // 6 log m / (s-1), dominates 1 - p^3
    bool p_in_unit = false;
    bool one_minus_p3_bounded = false;
};

// Evaluates the appendix parameterization m = C(n+s,s)^(2/13), p = m^(-2/(s-1)).
// Asserts only the concrete steps: p in (0,1), the case split covering, and
// 1 - p^3 <= 6 log m/(s-1); magnitudes are reported, not judged.
AppendixReport appendix_eval(int s, int n);

// t * 2^h * r^(h-1)
LogValue blowup_bound(int h, int t, LogValue r_hg);

// r_fg * 2^h * r_hg^(h-1)
LogValue replace_bound(int h, LogValue r_fg, LogValue r_hg);

// C(s+n-2, s-1) + 1, exact.
uint64_t link_vs_link_bound(int s, int n);

// m_blow * 2^(n+1) * (C(s+n-2, s-1) + 1)^n
LogValue blowup_link_bound(int s, int n, int m_blow);

// 3n * r^h
LogValue indep_edge_bound(int h, int n, LogValue r_host);

struct BetaConstants {
    double alpha = 0;     // sqrt(3)/2 - 1/2
    double beta = 0;      // alpha (1-alpha)^2 / (2 (1-alpha^3))
    double six_beta = 0;
    double residual = 0;  // |beta - (beta alpha^3 + alpha (1-alpha)^2 / 2)|
};

BetaConstants e_recursion_beta();

struct RecursionTrend {
    int s = 0;
    uint64_t e_value = 0;  // iterate of E(a+b) >= E(a) + a*C(b,2) with a = round(alpha s)
    double ratio = 0;      // E(s) / C(s,3)
};

RecursionTrend e_recursion_trend(int s);

struct F3Result {
    int value = 0;            // minimum independence number among admissible 3-graphs
    ThreeGraph witness;       // a minimizer
    uint64_t graphs_checked = 0;
};

// Exhaustive minimum of the independence number over all 3-graphs on N
// vertices in which every s-subset spans fewer than t triples. Prunes the
// subset walk on the monotone s-subset constraint. N <= 6.
F3Result f3_small(int N, int s, int t);

} // namespace rforge
