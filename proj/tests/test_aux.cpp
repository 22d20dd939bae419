#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "rforge/aux_graph.hpp"
#include "rforge/solve.hpp"

using namespace rforge;

TEST_CASE("gnp sampling is seed-deterministic") {
    Graph a = sample_gnp(20, 0.3, 42);
    Graph b = sample_gnp(20, 0.3, 42);
    CHECK(a == b);
    CHECK(!(sample_gnp(20, 0.3, 43) == a));
    CHECK(sample_gnp(10, 0.0, 1).edge_count() == 0);
    CHECK(sample_gnp(10, 1.0, 1).edge_count() == 45);
}

TEST_CASE("cycle destruction certifies girth") {
    DestructionResult r = destroy_short_cycles(complete_graph(6), 3);
    auto g = girth(r.graph);
    CHECK((!g.has_value() || *g > 3));
    CHECK(r.deletions > 0);

    // Already long girth: untouched.
    DestructionResult p = destroy_short_cycles(petersen_graph(), 4);
    CHECK(p.deletions == 0);
    CHECK(p.graph == petersen_graph());
}

TEST_CASE("biset destruction kills crossing-free pairs of the given order") {
    for (uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = oracles::random_graph(12, 0.25, seed);
        for (int t : {2, 3}) {
            DestructionResult r = destroy_bipartite_independent_sets(g, t);
            CHECK(!find_bipartite_independent(r.graph, t).has_value());
        }
    }
}

TEST_CASE("palette construction certificate reflects exact recomputation") {
    AuxParams params;
    params.g = 3;
    params.m = 6;
    params.t = 5;
    AuxResult res = construct_auxiliary(params, 7);
    CHECK(res.graph.vertex_count() == 6);
    CHECK(res.certificate.girth_ok);
    auto g = girth(res.graph);
    CHECK((!g.has_value() || *g > 3));
    CHECK(res.certificate.alpha2 == multipartite_independence(res.graph).value);
    CHECK(res.certificate.alpha2 < 5);
    CHECK(res.certificate.attempts_used >= 1);
}

TEST_CASE("construction failure carries the survivor count") {
    AuxParams params;
    params.g = 3;
    params.m = 10;
    params.t = 1; // order-1 bisets: any non-edge dies, nothing survives
    params.attempts = 3;
    CHECK_THROWS_AS(construct_auxiliary(params, 1), ConstructionFailed);
}

TEST_CASE("default parameters follow the asymptotic recipe") {
    CHECK(default_sample_probability(3, 64) == doctest::Approx(std::pow(256.0, -2.0 / 3.0)));
    CHECK(default_biset_threshold(3, 512) == int(std::ceil(std::pow(512.0, 1.0 - 1.0 / 9.0) / 16.0)));
    CHECK(default_biset_threshold(3, 10) >= 1);
}

TEST_CASE("property checks report their verification mode") {
    Graph c5 = cycle_graph(5);
    PropertyCheck pc = verify_properties(c5, 3, 0, 200);
    CHECK(pc.property1_ok); // odd girth 5 > 3
    CHECK(pc.odd_girth == 5);
    CHECK(pc.property2_mode == "exhaustive");

    Graph big = sample_gnp(24, 0.3, 9);
    PropertyCheck pb = verify_properties(big, 3, 1, 50);
    CHECK(pb.property2_mode == "sampled");
}

TEST_CASE("tensor lemma holds on small random graphs") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = oracles::random_graph(2 + int(seed % 5), 0.5, seed);
        TensorLemmaCheck c = check_tensor_lemma(g);
        CHECK(c.holds);
        CHECK(c.bound == 4 * int64_t(g.vertex_count()) * (c.alpha2_base + 1));
        CHECK(c.alpha2_base == multipartite_independence(g).value);
    }
}

TEST_CASE("non-neighborhood lemma is exhaustive on small graphs") {
    NonNeighborhoodCheck c = check_nonneighborhood_lemma(petersen_graph());
    CHECK(c.holds);
    CHECK(c.violations == 0);
    CHECK(c.alpha2 == multipartite_independence(petersen_graph()).value);
    CHECK(c.alpha2 == 2);
    // Only sets larger than alpha2 carry content; 2^10 minus the 56 subsets
    // of size <= 2.
    CHECK(c.sets_checked == (uint64_t(1) << 10) - 56);
}

TEST_CASE("hom threshold lower curve") {
    CHECK(p_hom_lower(3, 100.0) == doctest::Approx(std::pow(100.0, -1.0)));
    CHECK(p_hom_lower(5, 16.0) == doctest::Approx(std::pow(16.0, -0.5)));
    CHECK(p_hom_lower(4, 1000.0) < p_hom_lower(5, 1000.0));
}
