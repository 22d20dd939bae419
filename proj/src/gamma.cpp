#include "rforge/gamma.hpp"

#include <cmath>
#include <numeric>

#include "rforge/aux_graph.hpp"
#include "rforge/rng.hpp"

namespace rforge {

PairColoring random_coloring(int n_points, int palette_size, uint64_t seed) {
    PairColoring chi(n_points, palette_size);
    Rng rng(seed);
    for (int a = 0; a < n_points; ++a)
        for (int b = 0; b < n_points; ++b)
            if (a != b) chi.set_color(a, b, int(rng.below(uint32_t(palette_size))));
    return chi;
}

// Symmetric in {i,j,k}: each corner sees the other two through adjacent
// palette colors.
bool is_adjacent_triangle(const PairColoring& chi, const Graph& palette,
                          int i, int j, int k) {
    return palette.adjacent(chi.color(i, j), chi.color(i, k)) &&
           palette.adjacent(chi.color(j, i), chi.color(j, k)) &&
           palette.adjacent(chi.color(k, i), chi.color(k, j));
}

ThreeGraph build_gamma(const PairColoring& chi, const Graph& palette) {
    int n = chi.points();
    std::vector<Triple> ts;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (is_adjacent_triangle(chi, palette, i, j, k))
                    ts.push_back({i, j, k});
    return ThreeGraph(n, std::move(ts));
}

ThreeGraph build_gamma_cfs(const PairColoring& chi, const Graph& palette) {
    int n = chi.points();
    std::vector<Triple> ts;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (palette.adjacent(chi.color(i, j), chi.color(i, k)))
                    ts.push_back({i, j, k});
    return ThreeGraph(n, std::move(ts));
}

double adjacent_triangle_probability(const Graph& palette) {
    int m = palette.vertex_count();
    double q = 2.0 * palette.edge_count() / (double(m) * m);
    return q * q * q;
}

LinkFreeResult verify_link_free(const ThreeGraph& gamma, const Graph& forbidden,
                                const SearchLimits& limits) {
    LinkFreeResult out;
    for (int v = 0; v < gamma.vertex_count(); ++v) {
        Graph link = link_of_vertex(gamma, v);
        auto hit = contains_copy(forbidden, link, limits);
        if (hit.exists) {
            out.free = false;
            out.vertex = v;
            out.mapping = hit.map;
            return out;
        }
    }
    return out;
}

HoleResult find_tripartite_hole(const ThreeGraph& gamma, int n,
                                int exhaustive_limit, uint64_t seed) {
    if (n < 1) throw DomainError("find_tripartite_hole: need n >= 1");
    HoleResult out;
    if (gamma.vertex_count() <= exhaustive_limit) {
        auto found = find_tripartite_independent(gamma, n);
        if (found) {
            out.status = HoleStatus::Found;
            out.parts = *found;
        } else {
            out.status = HoleStatus::Absent;
        }
        return out;
    }

    // Too large to certify absence: randomized greedy attempts only.
    int big_n = gamma.vertex_count();
    Rng rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> order(big_n);
        std::iota(order.begin(), order.end(), 0);
        for (int i = big_n - 1; i > 0; --i)
            std::swap(order[i], order[rng.below(uint32_t(i + 1))]);
        std::array<std::vector<int>, 3> parts;
        for (int v : order) {
            for (int q = 0; q < 3; ++q) {
                if (int(parts[q].size()) >= n) continue;
                bool ok = true;
                int a = (q + 1) % 3, b = (q + 2) % 3;
                for (int x : parts[a]) {
                    for (int y : parts[b])
                        if (gamma.has_triple(v, x, y)) { ok = false; break; }
                    if (!ok) break;
                }
                if (ok) { parts[q].push_back(v); break; }
            }
        }
        if (int(std::min({parts[0].size(), parts[1].size(), parts[2].size()})) >= n) {
            for (auto& part : parts) part.resize(n);
            out.status = HoleStatus::Found;
            out.parts = parts;
            return out;
        }
    }
    return out;
}

LogValue hole_probability_bound(int m, double p, int n) {
    if (m < 1 || n < 1 || p < 0.0 || p >= 1.0)
        throw DomainError("hole_probability_bound: need m,n >= 1 and p in [0,1)");
    const double delta = 1.0 / 27.0;
    const double nv = 3.0 * n; // the tripartite template has 3n vertices
    LogValue first = LogValue::from_double(1.0 - p * p * p).pow(delta * nv * nv * nv / 2.0);
    LogValue second = LogValue::from_double(2.0 * std::exp(1.0) * nv * nv / (delta * m))
                          .pow(delta * nv * nv / 2.0);
    return first + second;
}

HoleProbability estimate_hole_probability(int m, double p, int n, int trials,
                                          uint64_t seed) {
    if (trials < 1) throw DomainError("estimate_hole_probability: need trials >= 1");
    HoleProbability out;
    out.trials = trials;
    out.bound = hole_probability_bound(m, p, n);
    int nv = 3 * n;
    int hits = 0;
    for (int trial = 0; trial < trials; ++trial) {
        Graph palette = sample_gnp(m, p, Rng::derive(seed, uint64_t(trial) * 2));
        PairColoring chi = random_coloring(nv, m, Rng::derive(seed, uint64_t(trial) * 2 + 1));
        bool hole = true;
        for (int i = 0; i < n && hole; ++i)
            for (int j = n; j < 2 * n && hole; ++j)
                for (int k = 2 * n; k < 3 * n && hole; ++k)
                    if (is_adjacent_triangle(chi, palette, i, j, k)) hole = false;
        if (hole) ++hits;
    }
    out.estimate = double(hits) / trials;
    out.within = LogValue::from_double(out.estimate) <= out.bound;
    return out;
}

} // namespace rforge
