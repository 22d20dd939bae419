#include "rforge/census.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rforge/solve.hpp"

namespace rforge {

namespace {

constexpr uint64_t kStateBudget = uint64_t(1) << 25;

// States m^slots, saturating.
uint64_t state_count(int m, int slots) {
    uint64_t total = 1;
    for (int s = 0; s < slots; ++s) {
        if (total > kStateBudget) return total;
        total *= uint64_t(m);
    }
    return total;
}

} // namespace

std::vector<OrderedPair> e1_pairs(int n) {
    std::vector<OrderedPair> ps;
    for (int i = 0; i < n; ++i)
        for (int v = n; v < 3 * n; ++v) ps.push_back({i, v});
    return ps;
}

std::vector<OrderedPair> e2_pairs(int n) {
    std::vector<OrderedPair> ps;
    for (int v = n; v < 3 * n; ++v)
        for (int i = 0; i < n; ++i) ps.push_back({v, i});
    return ps;
}

std::vector<OrderedPair> e3_pairs(int n) {
    std::vector<OrderedPair> ps;
    for (int j = n; j < 2 * n; ++j)
        for (int k = 2 * n; k < 3 * n; ++k) {
            ps.push_back({j, k});
            ps.push_back({k, j});
        }
    return ps;
}

std::vector<OrderedPair> census_pair_order(int n) {
    std::vector<OrderedPair> order = e2_pairs(n);
    auto e3 = e3_pairs(n);
    auto e1 = e1_pairs(n);
    order.insert(order.end(), e3.begin(), e3.end());
    order.insert(order.end(), e1.begin(), e1.end());
    return order;
}

namespace {

// An I-J-K triple is adjacent when all three corner conditions hold.
bool triple_adjacent(const TripartiteColoring& chi, const Graph& palette,
                     int i, int j, int k) {
    return palette.adjacent(chi.color(i, j), chi.color(i, k)) &&
           palette.adjacent(chi.color(j, i), chi.color(j, k)) &&
           palette.adjacent(chi.color(k, i), chi.color(k, j));
}

struct Slot {
    OrderedPair pair;
    // Triples whose six slots are all colored once this slot is; checked the
    // moment this slot gets its color.
    std::vector<std::array<int, 3>> closing;
};

// DFS over the given slots; fixed slots keep chi's colors. Visits every
// completion that never closes an adjacent triple.
class Enumerator {
public:
    Enumerator(TripartiteColoring chi, const Graph& palette,
               std::vector<OrderedPair> free_slots)
        : chi_(std::move(chi)), palette_(&palette) {
        int n = chi_.part_size();
        slots_.reserve(free_slots.size());
        std::vector<std::vector<int>> slot_of(size_t(chi_.points()),
                                              std::vector<int>(chi_.points(), -1));
        for (size_t s = 0; s < free_slots.size(); ++s) {
            auto [a, b] = free_slots[s];
            slot_of[a][b] = int(s);
            slots_.push_back({free_slots[s], {}});
        }
        // Attach each triple to its last-ordered free slot.
        for (int i = 0; i < n; ++i)
            for (int j = n; j < 2 * n; ++j)
                for (int k = 2 * n; k < 3 * n; ++k) {
                    int last = -1;
                    for (auto [a, b] : std::initializer_list<OrderedPair>{
                             {i, j}, {i, k}, {j, i}, {j, k}, {k, i}, {k, j}})
                        last = std::max(last, slot_of[a][b]);
                    if (last >= 0)
                        slots_[last].closing.push_back({i, j, k});
                    else if (triple_adjacent(chi_, *palette_, i, j, k))
                        dead_ = true; // fully fixed and already adjacent
                }
    }

    bool dead() const { return dead_; }

    void run(const std::function<bool(const TripartiteColoring&)>& visit) {
        if (dead_) return;
        stop_ = false;
        dfs(0, visit);
    }

private:
    void dfs(size_t depth, const std::function<bool(const TripartiteColoring&)>& visit) {
        if (stop_) return;
        if (depth == slots_.size()) {
            if (!visit(chi_)) stop_ = true;
            return;
        }
        auto [a, b] = slots_[depth].pair;
        for (int c = 0; c < chi_.palette_size(); ++c) {
            chi_.set_color(a, b, c);
            bool ok = true;
            for (auto [i, j, k] : slots_[depth].closing)
                if (triple_adjacent(chi_, *palette_, i, j, k)) { ok = false; break; }
            if (ok) dfs(depth + 1, visit);
            if (stop_) break;
        }
        chi_.set_color(a, b, -1);
    }

    TripartiteColoring chi_;
    const Graph* palette_;
    std::vector<Slot> slots_;
    bool dead_ = false;
    bool stop_ = false;
};

void check_budget(int m, int slots, const char* who) {
    if (state_count(m, slots) > kStateBudget)
        throw SizeLimitExceeded(std::string(who) + ": " + std::to_string(m) + "^" +
                                std::to_string(slots) + " states over budget");
}

} // namespace

bool is_triangle_free(const TripartiteColoring& chi, const Graph& palette) {
    int n = chi.part_size();
    for (int i = 0; i < n; ++i)
        for (int j = n; j < 2 * n; ++j)
            for (int k = 2 * n; k < 3 * n; ++k)
                if (triple_adjacent(chi, palette, i, j, k)) return false;
    return true;
}

void for_each_census_member(int n, const Graph& palette,
                            const std::function<bool(const TripartiteColoring&)>& visit) {
    if (n < 1) throw DomainError("census: need n >= 1");
    check_budget(palette.vertex_count(), 6 * n * n, "census");
    TripartiteColoring blank(n, palette.vertex_count());
    Enumerator e(std::move(blank), palette, census_pair_order(n));
    e.run(visit);
}

uint64_t enumerate_triangle_free(int n, const Graph& palette) {
    uint64_t count = 0;
    for_each_census_member(n, palette, [&](const TripartiteColoring&) {
        ++count;
        return true;
    });
    return count;
}

std::vector<TripartiteColoring> recolorings(const TripartiteColoring& chi,
                                            const Graph& palette,
                                            const std::vector<OrderedPair>& free_pairs) {
    if (!is_triangle_free(chi, palette))
        throw NotTriangleFree("recolorings: base coloring has an adjacent triple");
    check_budget(palette.vertex_count(), int(free_pairs.size()), "recolorings");
    TripartiteColoring base = chi;
    for (auto [a, b] : free_pairs) base.set_color(a, b, -1);
    std::vector<TripartiteColoring> out;
    Enumerator e(std::move(base), palette, free_pairs);
    e.run([&](const TripartiteColoring& full) {
        out.push_back(full);
        return true;
    });
    return out;
}

namespace {

uint64_t count_recolorings(const TripartiteColoring& chi, const Graph& palette,
                           const std::vector<OrderedPair>& free_pairs) {
    check_budget(palette.vertex_count(), int(free_pairs.size()), "recolorings");
    TripartiteColoring base = chi;
    for (auto [a, b] : free_pairs) base.set_color(a, b, -1);
    uint64_t count = 0;
    Enumerator e(std::move(base), palette, free_pairs);
    e.run([&](const TripartiteColoring&) {
        ++count;
        return true;
    });
    return count;
}

} // namespace

ProductCheck check_product_formula_E3(const TripartiteColoring& chi, const Graph& palette) {
    if (!is_triangle_free(chi, palette))
        throw NotTriangleFree("check_product_formula_E3: base not triangle-free");
    int n = chi.part_size();
    ProductCheck out;
    out.lhs = count_recolorings(chi, palette, e3_pairs(n));
    for (int j = n; j < 2 * n; ++j)
        for (int k = 2 * n; k < 3 * n; ++k) {
            uint64_t f = count_recolorings(chi, palette, {{j, k}, {k, j}});
            out.factors.push_back(f);
            out.rhs *= f;
        }
    out.equal = out.lhs == out.rhs;
    return out;
}

Graph build_gi(const TripartiteColoring& chi, const Graph& palette, int i) {
    int n = chi.part_size();
    if (i < 0 || i >= n) throw DomainError("build_gi: i out of part I");
    std::vector<std::pair<int, int>> es;
    for (int j = n; j < 2 * n; ++j)
        for (int k = 2 * n; k < 3 * n; ++k)
            if (palette.adjacent(chi.color(j, i), chi.color(j, k)) &&
                palette.adjacent(chi.color(k, i), chi.color(k, j)))
                es.push_back({j - n, k - n});
    return Graph(2 * n, std::move(es));
}

PairRecoloringStats pair_recoloring_stats(const TripartiteColoring& chi,
                                          const Graph& palette, int i, int j, int k) {
    int n = chi.part_size();
    if (i < 0 || i >= n || j < n || j >= 2 * n || k < 2 * n || k >= 3 * n)
        throw DomainError("pair_recoloring_stats: want i in I, j in J, k in K");
    PairRecoloringStats stats;
    int m = palette.vertex_count();
    for (int cjk = 0; cjk < m; ++cjk)
        for (int ckj = 0; ckj < m; ++ckj) {
            // Only triples (i', j, k) can be affected by these two slots.
            bool ok = true;
            for (int ii = 0; ii < n && ok; ++ii)
                if (palette.adjacent(chi.color(ii, j), chi.color(ii, k)) &&
                    palette.adjacent(chi.color(j, ii), cjk) &&
                    palette.adjacent(chi.color(k, ii), ckj))
                    ok = false;
            if (!ok) continue;
            ++stats.valid;
            if (palette.adjacent(chi.color(j, i), cjk) &&
                palette.adjacent(chi.color(k, i), ckj))
                ++stats.edge;
        }
    return stats;
}

Graph build_gi_star(const TripartiteColoring& chi, const Graph& palette, int i) {
    int n = chi.part_size();
    if (i < 0 || i >= n) throw DomainError("build_gi_star: i out of part I");
    std::vector<std::pair<int, int>> es;
    for (int j = n; j < 2 * n; ++j)
        for (int k = 2 * n; k < 3 * n; ++k)
            if (pair_recoloring_stats(chi, palette, i, j, k).edge > 0)
                es.push_back({j - n, k - n});
    return Graph(2 * n, std::move(es));
}

ProductCheck check_hom_product_formula(const TripartiteColoring& chi, const Graph& palette) {
    if (!is_triangle_free(chi, palette))
        throw NotTriangleFree("check_hom_product_formula: base not triangle-free");
    int n = chi.part_size();
    ProductCheck out;
    out.lhs = count_recolorings(chi, palette, e1_pairs(n));
    for (int i = 0; i < n; ++i) {
        uint64_t f = count_homomorphisms_into_complement(build_gi(chi, palette, i), palette);
        out.factors.push_back(f);
        out.rhs *= f;
    }
    out.equal = out.lhs == out.rhs;
    return out;
}

ShearerResult shearer_check(const std::vector<std::vector<int>>& family,
                            const std::vector<std::vector<int>>& cover) {
    if (family.empty()) throw DomainError("shearer_check: empty family");
    size_t width = family.front().size();
    for (const auto& tuple : family)
        if (tuple.size() != width) throw DomainError("shearer_check: ragged tuples");
    if (cover.empty()) throw EmptyCover("shearer_check: no cover sets");

    std::vector<uint64_t> coverage(width, 0);
    for (const auto& cs : cover)
        for (int coord : cs) {
            if (coord < 0 || size_t(coord) >= width)
                throw DomainError("shearer_check: cover coordinate out of range");
            ++coverage[coord];
        }
    ShearerResult out;
    out.k = *std::min_element(coverage.begin(), coverage.end());
    if (out.k == 0) throw EmptyCover("shearer_check: a coordinate is uncovered");

    std::set<std::vector<int>> distinct(family.begin(), family.end());
    out.family_size = distinct.size();
    out.lhs = LogValue::from_double(double(out.family_size)).pow(double(out.k));
    out.rhs = LogValue::one();
    for (const auto& cs : cover) {
        std::set<std::vector<int>> proj;
        for (const auto& tuple : distinct) {
            std::vector<int> p;
            p.reserve(cs.size());
            for (int coord : cs) p.push_back(tuple[coord]);
            proj.insert(std::move(p));
        }
        out.projection_sizes.push_back(proj.size());
        out.rhs = out.rhs * LogValue::from_double(double(proj.size()));
    }
    out.holds = out.lhs.log() <= out.rhs.log() + 1e-9;
    return out;
}

MGoodReport is_m_good(const Graph& l, int u_size, int m, double c) {
    int total = l.vertex_count();
    if (u_size < 0 || u_size > total) throw DomainError("is_m_good: bad U size");
    for (auto [a, b] : l.edges())
        if ((a < u_size) == (b < u_size))
            throw DomainError("is_m_good: edge inside one side");
    MGoodReport out;
    out.edge_count = l.edge_count();
    out.degree_ok = true;
    for (int u = 0; u < u_size; ++u)
        if (l.degree(u) != m) { out.degree_ok = false; break; }

    int v_size = total - u_size;
    out.delete_budget = int(c * v_size);
    // Every V' obtained by deleting at most the budget is incident to at
    // least a quarter of the edges; the worst deletion takes the highest
    // degrees, so only that one needs checking.
    std::vector<int> degs;
    for (int v = u_size; v < total; ++v) degs.push_back(l.degree(v));
    std::sort(degs.rbegin(), degs.rend());
    int64_t lost = 0;
    for (int d = 0; d < out.delete_budget && d < int(degs.size()); ++d) lost += degs[d];
    out.incidence_ok = 4 * (out.edge_count - lost) >= out.edge_count;
    out.good = out.degree_ok && out.incidence_ok;
    return out;
}

IotaStats iota_stats(const TripartiteColoring& chi, const Graph& palette, int g,
                     double c) {
    if (g < 2) throw DomainError("iota_stats: need g >= 2");
    int n = chi.part_size();
    int m = palette.vertex_count();
    IotaStats out;
    double log_m = std::log(double(m));
    double exp_scaled = (2.0 - c * c / g) * n;
    double exp_flat = 2.0 - c * c / g;
    int hit_scaled = 0, hit_flat = 0;
    for (int i = 0; i < n; ++i) {
        uint64_t hom = count_homomorphisms_into_complement(build_gi(chi, palette, i), palette);
        out.hom_counts.push_back(hom);
        double lg = hom == 0 ? -1.0 : std::log(double(hom));
        if (hom > 0 && lg >= exp_scaled * log_m - 1e-12) ++hit_scaled;
        if (hom > 0 && lg >= exp_flat * log_m - 1e-12) ++hit_flat;
    }
    out.frac_scaled = double(hit_scaled) / n;
    out.frac_flat = double(hit_flat) / n;
    return out;
}

FamilyClassification classify_families(int n, const Graph& palette, int g, double c) {
    if (g < 2) throw DomainError("classify_families: need g >= 2");
    int m = palette.vertex_count();
    FamilyClassification out;
    out.f2_vacuous = c * n * n < 1.0;
    double log_m = std::log(double(m));
    double member_exp = (2.0 - c * c / (7.0 * g)) * n * n;
    auto member = [&](uint64_t count) {
        return count > 0 && std::log(double(count)) <= member_exp * log_m + 1e-12;
    };
    for_each_census_member(n, palette, [&](const TripartiteColoring& chi) {
        ++out.census;
        if (member(count_recolorings(chi, palette, e1_pairs(n)))) ++out.f1_members;
        if (member(count_recolorings(chi, palette, e3_pairs(n)))) ++out.f3_members;
        return true;
    });
    out.family_bound = LogValue::from_log((6.0 - c * c / (7.0 * g)) * n * n * log_m);
    out.f1_within = LogValue::from_double(double(out.f1_members)) <= out.family_bound;
    out.f3_within = LogValue::from_double(double(out.f3_members)) <= out.family_bound;
    return out;
}

CensusReport census_vs_bound(int n, const Graph& palette, int g, double c) {
    if (g < 2) throw DomainError("census_vs_bound: need g >= 2");
    CensusReport out;
    out.count = enumerate_triangle_free(n, palette);
    int m = palette.vertex_count();
    double log_m = std::log(double(m));
    double a = c * c / 8.0;
    out.bound = LogValue::from_log((6.0 - a / g) * n * n * log_m);
    out.log_ratio = m > 1 && out.count > 0
                        ? std::log(double(out.count)) / (double(n) * n * log_m)
                        : 0.0;
    return out;
}

} // namespace rforge
