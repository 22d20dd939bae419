#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rforge/graph.hpp"
#include "rforge/three_graph.hpp"

namespace rforge {

// Exact-search size limits. Exceeding one raises SizeLimitExceeded; there is
// no silent fallback to approximation anywhere in this library.
struct SearchLimits {
    int exact_vertices = 64;   // independence / multipartite independence
    int hom_source = 16;       // hom_exists source side
    int hom_count_source = 20; // count_homomorphisms source side
    int copy_pattern = 12;     // contains_copy / subgraph patterns
};

inline constexpr SearchLimits kDefaultLimits{};

struct IndependenceResult {
    int value = 0;
    std::vector<int> witness; // one maximum set, lowest-id-first
};

IndependenceResult independence_number(const Graph& g,
                                       const SearchLimits& limits = kDefaultLimits);
IndependenceResult independence_number(const ThreeGraph& h,
                                       const SearchLimits& limits = kDefaultLimits);

struct MultipartiteResult {
    int value = 0;                          // largest t with k disjoint t-sets
    std::vector<std::vector<int>> witness;  // k parts, each of size `value`
};

// Largest t admitting k disjoint t-sets with no edge meeting every part once.
// Edges inside a part are allowed. k = 2 for graphs.
MultipartiteResult multipartite_independence(const Graph& g, int k = 2,
                                             const SearchLimits& limits = kDefaultLimits);
// k = 3 for 3-graphs: no triple with one vertex in each part.
MultipartiteResult multipartite_independence(const ThreeGraph& h, int k = 3,
                                             const SearchLimits& limits = kDefaultLimits);

// Decision form used by destruction loops: some pair of disjoint t-sets with
// no crossing edge, or nullopt. Deterministic: same input, same witness.
std::optional<std::array<std::vector<int>, 2>>
find_bipartite_independent(const Graph& g, int t);

// Decision form for 3-graphs: three disjoint t-sets, no triple meeting all.
std::optional<std::array<std::vector<int>, 3>>
find_tripartite_independent(const ThreeGraph& h, int t);

// Girth of the shortest cycle / shortest odd cycle; nullopt means none exists.
std::optional<int> girth(const Graph& g);
std::optional<int> odd_girth(const Graph& g);

// Count distinct cycles of length 3..max_len (each cycle once).
int64_t count_short_cycles(const Graph& g, int max_len);

struct HomWitness {
    bool exists = false;
    std::vector<int> map; // source vertex -> target vertex
};

// Graph homomorphism: edge {u,v} of source maps to an edge of target
// (endpoints must land on adjacent, hence distinct, target vertices).
HomWitness hom_exists(const Graph& source, const Graph& target,
                      const SearchLimits& limits = kDefaultLimits);

uint64_t count_homomorphisms(const Graph& source, const Graph& target,
                             const SearchLimits& limits = kDefaultLimits);

// Maps sending every source edge to a non-adjacent (possibly equal) pair of
// `avoid`'s vertices, i.e. homomorphisms into the complement with loops.
uint64_t count_homomorphisms_into_complement(const Graph& source, const Graph& avoid,
                                             const SearchLimits& limits = kDefaultLimits);

// Injective embedding preserving edges/triples (subgraph, not induced).
HomWitness contains_copy(const Graph& pattern, const Graph& host,
                         const SearchLimits& limits = kDefaultLimits);
HomWitness contains_copy(const ThreeGraph& pattern, const ThreeGraph& host,
                         const SearchLimits& limits = kDefaultLimits);

} // namespace rforge
