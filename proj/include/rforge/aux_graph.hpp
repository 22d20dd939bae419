#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rforge/graph.hpp"
#include "rforge/solve.hpp"

namespace rforge {

// Palette construction by random sparse sampling plus two destruction
// phases: first delete a vertex from every cycle of length <= g, then from
// every pair of disjoint t-sets spanning no crossing edge, and finally trim
// to exactly m vertices. The defaults follow the asymptotic recipe
//   p = (4m)^(-1+1/g),   t = ceil(m^(1-1/(3g)) / 16),
// which at desk scale collapses t to 1 and forces a near-complete remnant;
// callers working at small m should pass an explicit feasible t.
struct AuxParams {
    int g = 3;
    int m = 10;
    std::optional<double> p;    // default (4m)^(-1+1/g)
    std::optional<int> t;       // default ceil(m^(1-1/(3g))/16)
    int attempts = 64;          // fresh-seed retries before giving up
};

double default_sample_probability(int g, int m);
int default_biset_threshold(int g, int m);

struct AuxCertificate {
    bool girth_ok = false;          // girth > g, exact
    std::optional<int> girth;       // nullopt: acyclic
    int alpha2 = 0;                 // exact two-part independence of the result
    int deletions_cycles = 0;
    int deletions_bisets = 0;
    int attempts_used = 0;
    bool property2_ok = false;
    bool property3_ok = false;
    std::string property2_mode;     // "exhaustive" or "sampled"
    std::string property3_mode;
    std::vector<std::string> notes;
};

Graph sample_gnp(int n, double p, uint64_t seed);

struct DestructionResult {
    Graph graph;
    int deletions = 0;
};

// Delete the lowest-id vertex of a shortest cycle until girth > g.
DestructionResult destroy_short_cycles(const Graph& g_in, int g);

// Delete the lowest-id vertex of a found order-t crossing-free pair until
// none exists; the result has alpha_2 < t by construction and is rechecked.
DestructionResult destroy_bipartite_independent_sets(const Graph& g_in, int t);

struct AuxResult {
    Graph graph;
    AuxCertificate certificate;
};

// Certificate always reflects exact recomputation on the returned graph.
// Throws ConstructionFailed when no attempt keeps m vertices alive; the
// exception message carries the best attempt's survivor count.
AuxResult construct_auxiliary(const AuxParams& params, uint64_t seed);

struct PropertyCheck {
    bool property1_ok = false; // odd girth > g
    bool property2_ok = false; // |U| >= m^(1-1/(3g)) implies |nonadj(U)| < m^(1-1/(3g))
    bool property3_ok = false; // tensor-square analogue with exponent 2-1/(3g)
    std::optional<int> odd_girth;
    std::string property2_mode;
    std::string property3_mode;
    double threshold2 = 0.0;
    double threshold3 = 0.0;
};

// Property 2 is exhaustive for m <= 16, property 3 for m <= 4 (tensor square
// has m^2 vertices); above that 10^4 sampled sets per property.
PropertyCheck verify_properties(const Graph& a, int g, uint64_t seed = 0,
                                int samples = 10000);

struct TensorLemmaCheck {
    int alpha2_base = 0;
    int alpha2_tensor = 0;
    int64_t bound = 0; // 4m(alpha2_base+1)
    bool holds = false;
};

// alpha_2(A tensor A) < 4m(alpha_2(A)+1), both sides exact. Practical m <= 8.
TensorLemmaCheck check_tensor_lemma(const Graph& a,
                                    const SearchLimits& limits = kDefaultLimits);

struct NonNeighborhoodCheck {
    int alpha2 = 0;
    bool holds = false;        // every |U| > alpha2 has |nonadj(U)| <= 2*alpha2+1
    int violations = 0;
    uint64_t sets_checked = 0;
};

// Exhaustive over all vertex subsets; m <= 20 or so.
NonNeighborhoodCheck check_nonneighborhood_lemma(const Graph& a);

// Lower bound m^(-2/(s-1)) on the clique homomorphism density threshold.
double p_hom_lower(int s, double m);

} // namespace rforge
