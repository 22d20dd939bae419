#include "doctest.h"

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "rforge/census.hpp"
#include "rforge/solve.hpp"

using namespace rforge;

namespace {

TripartiteColoring n1_coloring(const std::array<int, 6>& c, int m) {
    TripartiteColoring chi(1, m);
    chi.set_color(0, 1, c[0]);
    chi.set_color(0, 2, c[1]);
    chi.set_color(1, 0, c[2]);
    chi.set_color(1, 2, c[3]);
    chi.set_color(2, 0, c[4]);
    chi.set_color(2, 1, c[5]);
    return chi;
}

} // namespace

TEST_CASE("pair classes partition the cross pairs") {
    for (int n : {1, 2, 3}) {
        auto e1 = e1_pairs(n), e2 = e2_pairs(n), e3 = e3_pairs(n);
        CHECK(e1.size() == size_t(2 * n * n));
        CHECK(e2.size() == size_t(2 * n * n));
        CHECK(e3.size() == size_t(2 * n * n));
        std::set<OrderedPair> all(e1.begin(), e1.end());
        all.insert(e2.begin(), e2.end());
        all.insert(e3.begin(), e3.end());
        CHECK(all.size() == size_t(6 * n * n));
        auto order = census_pair_order(n);
        CHECK(order.size() == size_t(6 * n * n));
        CHECK(std::set<OrderedPair>(order.begin(), order.end()) == all);
        // E1 comes last so rejections fire at the deepest level.
        CHECK(std::vector<OrderedPair>(order.end() - e1.size(), order.end()) == e1);
    }
}

TEST_CASE("tripartite coloring guards") {
    TripartiteColoring chi(2, 3);
    CHECK(chi.points() == 6);
    CHECK(chi.part_of(0) == 0);
    CHECK(chi.part_of(3) == 1);
    CHECK(chi.part_of(5) == 2);
    CHECK(!chi.cross(0, 1));
    CHECK(chi.cross(1, 2));
    CHECK_THROWS_AS(chi.set_color(0, 1, 0), DomainError);
    CHECK_THROWS_AS(chi.set_color(0, 2, 3), DomainError);
    chi.set_color(0, 2, 2);
    CHECK(chi.color(0, 2) == 2);
    CHECK(chi.color(2, 0) == -1);
}

TEST_CASE("triangle freeness on hand examples") {
    Graph k2 = complete_graph(2);
    CHECK(!is_triangle_free(n1_coloring({0, 1, 0, 1, 0, 1}, 2), k2));
    CHECK(is_triangle_free(n1_coloring({0, 0, 0, 1, 0, 1}, 2), k2));
    CHECK(is_triangle_free(n1_coloring({0, 1, 0, 1, 0, 1}, 2), empty_graph(2)));
}

TEST_CASE("census n=1 frozen values against the direct oracle") {
    Graph k2 = complete_graph(2);
    CHECK(enumerate_triangle_free(1, k2) == 56);
    CHECK(oracles::census_n1(k2) == 56);

    Graph k3 = complete_graph(3);
    CHECK(enumerate_triangle_free(1, k3) == 513);
    CHECK(oracles::census_n1(k3) == 513);

    CHECK(enumerate_triangle_free(1, empty_graph(2)) == 64);
    CHECK(enumerate_triangle_free(1, empty_graph(1)) == 1);

    // Path on 3 vertices: adjacency pairs 01,10,12,21 -> density (4/9)^3.
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(enumerate_triangle_free(1, p3) == oracles::census_n1(p3));
    CHECK(enumerate_triangle_free(1, p3) == 729 - 64);
}

TEST_CASE("census at n=2 respects the state budget") {
    Graph k2 = complete_graph(2);
    uint64_t count = enumerate_triangle_free(2, k2);
    CHECK(count > 0);
    CHECK(count < (uint64_t(1) << 24));
    // Too many states: n=2, m=3 needs 3^24 > 2^25.
    CHECK_THROWS_AS(enumerate_triangle_free(2, complete_graph(3)), SizeLimitExceeded);
}

TEST_CASE("census visitor sees each member exactly once") {
    Graph k2 = complete_graph(2);
    uint64_t seen = 0;
    std::set<std::array<int, 6>> distinct;
    for_each_census_member(1, k2, [&](const TripartiteColoring& chi) {
        ++seen;
        CHECK(is_triangle_free(chi, k2));
        distinct.insert({chi.color(0, 1), chi.color(0, 2), chi.color(1, 0),
                         chi.color(1, 2), chi.color(2, 0), chi.color(2, 1)});
        return true;
    });
    CHECK(seen == 56);
    CHECK(distinct.size() == 56);

    // Early stop.
    uint64_t first = 0;
    for_each_census_member(1, k2, [&](const TripartiteColoring&) {
        ++first;
        return false;
    });
    CHECK(first == 1);
}

TEST_CASE("recolorings fix the complement and stay triangle-free") {
    Graph k2 = complete_graph(2);
    TripartiteColoring base = n1_coloring({0, 0, 0, 1, 0, 1}, 2);
    auto free_pairs = e1_pairs(1); // slots (0,1),(0,2)
    // Corner conditions at 1 and 2 already hold, so adjacency comes down to
    // chi(0,1)~chi(0,2): two of the four assignments complete the triangle.
    auto members = recolorings(base, k2, free_pairs);
    CHECK(members.size() == 2);
    for (const auto& chi : members) {
        CHECK(is_triangle_free(chi, k2));
        CHECK(chi.color(1, 2) == base.color(1, 2));
        CHECK(chi.color(2, 1) == base.color(2, 1));
    }
    CHECK_THROWS_AS(recolorings(n1_coloring({0, 1, 0, 1, 0, 1}, 2), k2, free_pairs),
                    NotTriangleFree);
}

TEST_CASE("product formulas hold with exact equality across a census") {
    for (const Graph& palette :
         {complete_graph(2), complete_graph(3), Graph(3, {{0, 1}, {1, 2}}), empty_graph(2)}) {
        for_each_census_member(1, palette, [&](const TripartiteColoring& chi) {
            ProductCheck e3 = check_product_formula_E3(chi, palette);
            CHECK(e3.equal);
            CHECK(e3.lhs == e3.rhs);
            ProductCheck e1 = check_hom_product_formula(chi, palette);
            CHECK(e1.equal);
            return true;
        });
    }
}

TEST_CASE("product formulas with several genuine factors at n=2") {
    Graph k2 = complete_graph(2);
    int checked = 0;
    for_each_census_member(2, k2, [&](const TripartiteColoring& chi) {
        ProductCheck e3 = check_product_formula_E3(chi, k2);
        CHECK(e3.equal);
        CHECK(e3.factors.size() == 4); // unordered J-K pairs
        ProductCheck e1 = check_hom_product_formula(chi, k2);
        CHECK(e1.equal);
        CHECK(e1.factors.size() == 2); // one hom count per apex
        return ++checked < 40;
    });
    CHECK(checked == 40);
}

TEST_CASE("per-apex graphs and their recoloring relaxation") {
    Graph k2 = complete_graph(2);
    TripartiteColoring chi = n1_coloring({0, 0, 0, 1, 0, 1}, 2);
    Graph gi = build_gi(chi, k2, 0);
    Graph gis = build_gi_star(chi, k2, 0);
    CHECK(gi.vertex_count() == 2);
    CHECK(gis.vertex_count() == 2);
    for (auto [u, v] : gi.edges()) CHECK(gis.adjacent(u, v));

    PairRecoloringStats st = pair_recoloring_stats(chi, k2, 0, 1, 2);
    CHECK(st.valid <= 4);
    CHECK(st.edge <= st.valid);
    CHECK((gis.adjacent(0, 1) == (st.edge > 0)));
}

TEST_CASE("shearer inequality analytic cases") {
    // Product family [4]^3 under singleton cover: exact equality 64 = 4*4*4.
    std::vector<std::vector<int>> cube;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) cube.push_back({a, b, c});
    ShearerResult eq = shearer_check(cube, {{0}, {1}, {2}});
    CHECK(eq.holds);
    CHECK(eq.k == 1);
    CHECK(eq.family_size == 64);
    CHECK(eq.lhs.log() == doctest::Approx(eq.rhs.log()).epsilon(1e-12));

    // Diagonal pair under the three 2-covers: 2^2 = 4 <= 2*2*2 = 8.
    ShearerResult diag = shearer_check({{0, 0, 0}, {1, 1, 1}}, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(diag.holds);
    CHECK(diag.k == 2);
    CHECK(diag.lhs.log() == doctest::Approx(std::log(4.0)));
    CHECK(diag.rhs.log() == doctest::Approx(std::log(8.0)));

    CHECK_THROWS_AS(shearer_check({{0, 0}}, {{0}}), EmptyCover);
}

TEST_CASE("m-good bipartite checks") {
    // U = {0,1} each joined to all of V = {2,3,4,5}.
    Graph l(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
    MGoodReport r = is_m_good(l, 2, 4);
    CHECK(r.good);
    CHECK(r.degree_ok);
    CHECK(r.incidence_ok);
    CHECK(r.delete_budget == 0);
    CHECK(r.edge_count == 8);

    MGoodReport wrong = is_m_good(l, 2, 3);
    CHECK(!wrong.degree_ok);
    CHECK(!wrong.good);
}

TEST_CASE("census bound and family classification are reported") {
    Graph k2 = complete_graph(2);
    CensusReport rep = census_vs_bound(1, k2, 3);
    CHECK(rep.count == 56);
    // Bound exponent (6 - a/g) with a tiny: numerically 2^6 minus dust.
    CHECK(rep.bound.log() == doctest::Approx(6.0 * std::log(2.0)).epsilon(1e-6));
    CHECK(rep.log_ratio == doctest::Approx(std::log(56.0) / std::log(2.0)).epsilon(1e-9));

    FamilyClassification fams = classify_families(1, k2, 3);
    CHECK(fams.census == 56);
    CHECK(fams.f2_vacuous);
    CHECK(fams.f1_members <= fams.census);
    CHECK(fams.f3_members <= fams.census);

    IotaStats iota = iota_stats(n1_coloring({0, 0, 0, 1, 0, 1}, 2), k2, 3);
    CHECK(iota.hom_counts.size() == 1);
    CHECK(iota.frac_scaled >= 0.0);
    CHECK(iota.frac_scaled <= 1.0);
    CHECK(iota.frac_flat >= iota.frac_scaled - 1e-12);
}
