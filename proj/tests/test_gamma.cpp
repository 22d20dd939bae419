#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "rforge/gamma.hpp"
#include "rforge/solve.hpp"

using namespace rforge;

namespace {

// All six ordered cross slots on 3 points, in a fixed order.
PairColoring three_point_coloring(const std::array<int, 6>& c, int m) {
    PairColoring chi(3, m);
    chi.set_color(0, 1, c[0]);
    chi.set_color(0, 2, c[1]);
    chi.set_color(1, 0, c[2]);
    chi.set_color(1, 2, c[3]);
    chi.set_color(2, 0, c[4]);
    chi.set_color(2, 1, c[5]);
    return chi;
}

} // namespace

TEST_CASE("pair coloring basics") {
    PairColoring chi = random_coloring(10, 4, 5);
    CHECK(chi.points() == 10);
    CHECK(chi.palette_size() == 4);
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) {
            if (a == b)
                CHECK(chi.color(a, b) == -1);
            else {
                CHECK(chi.color(a, b) >= 0);
                CHECK(chi.color(a, b) < 4);
            }
        }
    CHECK(random_coloring(10, 4, 5).raw() == chi.raw());
    CHECK(random_coloring(10, 4, 6).raw() != chi.raw());
    CHECK_THROWS_AS(chi.set_color(3, 3, 0), DomainError);
    CHECK_THROWS_AS(chi.set_color(0, 1, 4), DomainError);
}

TEST_CASE("adjacent triangle predicate on a hand example") {
    Graph k2 = complete_graph(2);
    // All three corner conditions hold: 0~1 in K2 everywhere.
    PairColoring adj = three_point_coloring({0, 1, 0, 1, 0, 1}, 2);
    CHECK(is_adjacent_triangle(adj, k2, 0, 1, 2));
    CHECK(build_gamma(adj, k2).triple_count() == 1);

    // Break only the middle corner: chi(1,0) = chi(1,2).
    PairColoring mid = three_point_coloring({0, 1, 0, 0, 0, 1}, 2);
    CHECK(!is_adjacent_triangle(mid, k2, 0, 1, 2));
    CHECK(build_gamma(mid, k2).triple_count() == 0);
    // But the first corner alone still holds, so the one-condition variant keeps it.
    CHECK(build_gamma_cfs(mid, k2).triple_count() == 1);
}

TEST_CASE("single-condition variant is a supergraph") {
    Graph c5 = cycle_graph(5);
    for (uint64_t seed = 0; seed < 5; ++seed) {
        PairColoring chi = random_coloring(12, 5, seed);
        ThreeGraph g = build_gamma(chi, c5);
        ThreeGraph cfs = build_gamma_cfs(chi, c5);
        CHECK(cfs.triple_count() >= g.triple_count());
        for (auto [a, b, c] : g.triples()) CHECK(cfs.has_triple(a, b, c));
    }
}

TEST_CASE("edgeless palette yields an empty triple system") {
    PairColoring chi = random_coloring(8, 3, 1);
    CHECK(build_gamma(chi, empty_graph(3)).triple_count() == 0);
}

TEST_CASE("triangle density of a uniform coloring") {
    CHECK(adjacent_triangle_probability(complete_graph(2)) == doctest::Approx(1.0 / 8));
    CHECK(adjacent_triangle_probability(cycle_graph(5)) ==
          doctest::Approx(std::pow(2.0 / 5, 3)));
    CHECK(adjacent_triangle_probability(empty_graph(4)) == 0.0);
}

TEST_CASE("hom-free palette forces pattern-free links") {
    Graph c5 = cycle_graph(5), k3 = complete_graph(3);
    REQUIRE(!hom_exists(k3, c5).exists);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        PairColoring chi = random_coloring(15, 5, seed);
        ThreeGraph gamma = build_gamma(chi, c5);
        LinkFreeResult r = verify_link_free(gamma, k3);
        CHECK(r.free);
    }
}

TEST_CASE("hom-free premise is necessary") {
    // Palette K2 admits hom from K2, and indeed an adjacent triangle exists
    // whose links contain K2.
    Graph k2 = complete_graph(2);
    REQUIRE(hom_exists(k2, k2).exists);
    PairColoring adj = three_point_coloring({0, 1, 0, 1, 0, 1}, 2);
    ThreeGraph gamma = build_gamma(adj, k2);
    LinkFreeResult r = verify_link_free(gamma, k2);
    CHECK(!r.free);
    CHECK(r.vertex >= 0);
    // The returned mapping lands on a real link edge.
    Graph link = link_of_vertex(gamma, r.vertex);
    CHECK(link.adjacent(r.mapping[0], r.mapping[1]));
}

TEST_CASE("link violation reports a concrete witness") {
    // Hand-built: links of vertex 0 contain a triangle on {1,2,3}.
    ThreeGraph host(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    LinkFreeResult r = verify_link_free(host, complete_graph(3));
    CHECK(!r.free);
    CHECK(r.vertex == 0);
    Graph link = link_of_vertex(host, 0);
    Graph k3 = complete_graph(3);
    for (auto [u, v] : k3.edges()) CHECK(link.adjacent(r.mapping[u], r.mapping[v]));
}

TEST_CASE("tripartite hole search, exhaustive regime") {
    // Empty system: the greedy split is a hole.
    ThreeGraph empty(9, {});
    HoleResult r = find_tripartite_hole(empty, 3, 24, 0);
    CHECK(r.status == HoleStatus::Found);
    for (auto& part : r.parts) CHECK(part.size() == 3);

    // Complete system: no crossing-free singletons even.
    ThreeGraph full = oracles::random_three_graph(6, 1.1, 0);
    CHECK(find_tripartite_hole(full, 1, 24, 0).status == HoleStatus::Absent);

    // Found witness really spans no crossing triple.
    ThreeGraph h = oracles::random_three_graph(9, 0.15, 4);
    HoleResult w = find_tripartite_hole(h, 2, 24, 0);
    if (w.status == HoleStatus::Found) {
        for (int a : w.parts[0])
            for (int b : w.parts[1])
                for (int c : w.parts[2]) CHECK(!h.has_triple(a, b, c));
    }
}

TEST_CASE("tripartite hole search beyond the exhaustive limit cannot certify absence") {
    ThreeGraph full = oracles::random_three_graph(12, 1.1, 0);
    HoleResult r = find_tripartite_hole(full, 2, 6, 3);
    CHECK(r.status == HoleStatus::NotDecided);
}

TEST_CASE("hole probability estimate against its closed-form bound") {
    HoleProbability hp = estimate_hole_probability(6, 1.0 / 6, 2, 400, 11);
    CHECK(hp.trials == 400);
    CHECK(hp.estimate >= 0.0);
    CHECK(hp.estimate <= 1.0);
    CHECK(hp.within);
    CHECK(hp.bound.log() == hole_probability_bound(6, 1.0 / 6, 2).log());

    // Deterministic for a fixed seed.
    HoleProbability again = estimate_hole_probability(6, 1.0 / 6, 2, 400, 11);
    CHECK(again.estimate == hp.estimate);
}

TEST_CASE("hole probability bound closed form") {
    // d = 1/27, n = 2: exponents d(3n)^3/2 = 4 and d(3n)^2/2 = 2/3.
    double expect = std::pow(1.0 - std::pow(1.0 / 6, 3), 4.0) +
                    std::pow(2.0 * std::exp(1.0) * 36.0 / ((1.0 / 27) * 6.0), 2.0 / 3);
    CHECK(hole_probability_bound(6, 1.0 / 6, 2).log() ==
          doctest::Approx(std::log(expect)).epsilon(1e-9));
}
