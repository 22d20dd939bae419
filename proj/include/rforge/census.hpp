#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rforge/graph.hpp"
#include "rforge/log_value.hpp"

namespace rforge {

// Coloring of the ordered cross pairs of a tripartition I|J|K, each part of
// size n (vertices 0..3n-1 in part order). Same-part pairs and the diagonal
// hold the sentinel -1 and are never colored.
class TripartiteColoring {
public:
    TripartiteColoring(int n, int palette_size)
        : n_(n), m_(palette_size), values_(size_t(3 * n) * (3 * n), -1) {
        if (n < 1 || palette_size < 1) throw DomainError("TripartiteColoring: bad sizes");
    }

    int part_size() const { return n_; }
    int points() const { return 3 * n_; }
    int palette_size() const { return m_; }
    int part_of(int v) const { return v / n_; }
    bool cross(int a, int b) const { return part_of(a) != part_of(b); }

    int color(int a, int b) const { return values_[size_t(a) * points() + b]; }
    void set_color(int a, int b, int c) {
        if (!cross(a, b)) throw DomainError("TripartiteColoring: not a cross pair");
        if (c < -1 || c >= m_) throw DomainError("TripartiteColoring: color out of range");
        values_[size_t(a) * points() + b] = int8_t(c);
    }

    bool operator==(const TripartiteColoring& o) const = default;

private:
    int n_, m_;
    std::vector<int8_t> values_;
};

using OrderedPair = std::pair<int, int>;

// The three canonical classes of ordered cross pairs, each of size 2n^2:
//   E1 = I x (J u K),  E2 = (J u K) x I,  E3 = (J x K) u (K x J).
std::vector<OrderedPair> e1_pairs(int n);
std::vector<OrderedPair> e2_pairs(int n);
std::vector<OrderedPair> e3_pairs(int n);

// Slot order used by every census enumeration: E2, then E3, then E1.
// All triple rejections fire while coloring E1, which is why E1 goes last.
std::vector<OrderedPair> census_pair_order(int n);

bool is_triangle_free(const TripartiteColoring& chi, const Graph& palette);

// Number of states m^(6n^2) is capped; past the cap the enumeration throws
// SizeLimitExceeded (2^25 states, covering n=1 m<=4 and n=2 m=2).
uint64_t enumerate_triangle_free(int n, const Graph& palette);

// Visit census members in lexicographic slot order until the visitor
// returns false.
void for_each_census_member(int n, const Graph& palette,
                            const std::function<bool(const TripartiteColoring&)>& visit);

// All triangle-free colorings agreeing with chi outside `free_pairs`.
// Throws NotTriangleFree when chi itself has an adjacent triangle.
std::vector<TripartiteColoring> recolorings(const TripartiteColoring& chi,
                                            const Graph& palette,
                                            const std::vector<OrderedPair>& free_pairs);

struct ProductCheck {
    uint64_t lhs = 0;               // family size counted directly
    uint64_t rhs = 1;               // product of factor counts
    bool equal = false;
    std::vector<uint64_t> factors;
};

// |chi*(E3)| = product over unordered J-K pairs of the two-slot family sizes.
ProductCheck check_product_formula_E3(const TripartiteColoring& chi, const Graph& palette);

// |chi*(E1)| = product over i of hom(G_i(chi), complement-with-loops).
ProductCheck check_hom_product_formula(const TripartiteColoring& chi, const Graph& palette);

// Graph on J u K (local ids 0..2n-1, J first): j ~ k iff both far-end
// conditions through i already hold, i.e. chi(j,i)~chi(j,k) and
// chi(k,i)~chi(k,j) in the palette.
Graph build_gi(const TripartiteColoring& chi, const Graph& palette, int i);

// Relaxation: j ~ k iff some valid recoloring of the two slots (j,k),(k,j)
// makes j ~ k in build_gi. Always a supergraph of build_gi.
Graph build_gi_star(const TripartiteColoring& chi, const Graph& palette, int i);

struct PairRecoloringStats {
    uint64_t valid = 0; // recolorings of the two slots keeping triangle-freeness
    uint64_t edge = 0;  // those that make j ~ k in build_gi
};

PairRecoloringStats pair_recoloring_stats(const TripartiteColoring& chi,
                                          const Graph& palette, int i, int j, int k);

struct ShearerResult {
    uint64_t family_size = 0;
    uint64_t k = 0; // min coordinate coverage
    std::vector<uint64_t> projection_sizes;
    LogValue lhs, rhs; // |F|^k and the projection product
    bool holds = false;
};

// Shearer entropy inequality on an explicit tuple family. Cover sets contain
// coordinate indices; every coordinate must be covered at least once.
ShearerResult shearer_check(const std::vector<std::vector<int>>& family,
                            const std::vector<std::vector<int>>& cover);

struct MGoodReport {
    bool good = false;
    bool degree_ok = false;     // every U-vertex degree exactly m
    bool incidence_ok = false;  // every large V' misses at most 3/4 of the edges
    int delete_budget = 0;      // floor(c |V|), 0 at desk scale
    int64_t edge_count = 0;
};

// Bipartite graph given as `l` with U = vertices [0, u_size) and V the rest.
MGoodReport is_m_good(const Graph& l, int u_size, int m, double c = 1e-4);

struct IotaStats {
    // Fraction of i with hom(G_i, complement-with-loops) at or above the two
    // threshold readings m^((2-c^2/g)n) and m^(2-c^2/g).
    double frac_scaled = 0.0;
    double frac_flat = 0.0;
    std::vector<uint64_t> hom_counts;
};

IotaStats iota_stats(const TripartiteColoring& chi, const Graph& palette, int g,
                     double c = 1e-4);

struct FamilyClassification {
    uint64_t census = 0;
    uint64_t f1_members = 0;    // |chi*(E1)| <= m^((2-c^2/(7g))n^2)
    uint64_t f3_members = 0;    // same threshold on |chi*(E3)|
    bool f2_vacuous = true;     // c n^2 < 1: the middle family is undefined here
    LogValue family_bound;      // m^((6-c^2/(7g))n^2), reported not asserted
    bool f1_within = false;
    bool f3_within = false;
};

FamilyClassification classify_families(int n, const Graph& palette, int g,
                                       double c = 1e-4);

struct CensusReport {
    uint64_t count = 0;
    LogValue bound;          // m^((6-a/g)n^2), a = c^2/8
    double log_ratio = 0.0;  // log(count) / (n^2 log m); 0 when m = 1
};

// Census size against the explicit counting bound; reported, never asserted:
// the bound only separates at astronomically large m.
CensusReport census_vs_bound(int n, const Graph& palette, int g, double c = 1e-4);

} // namespace rforge
