#include "doctest.h"

#include <random>

#include "iim/clique.hpp"
#include "iim/generator.hpp"
#include "iim/triples.hpp"
#include "iim/verify.hpp"
#include "oracles.hpp"

using namespace iim;

// The triangle-free three-step growth from a single vertex used throughout
// the clique discussion: anticlone; clone then anticlone; then anticlone,
// clone, anticlone, anticlone. Its non-adjacent triple of edges is
// {0,2},{3,6},{1,4} with 1-based labels v1..v8.
static IIMGraph figure3_graph() {
    return iim_generate(Graph::complete(1), ChoiceSequence::parse("L1=0x1;L2=0x2;L3=0xd"));
}

TEST_CASE("exact clique solver") {
    CHECK(clique_number(Graph::complete(5)).size == 5);
    CHECK(clique_number(Graph::cycle(5)).size == 2);
    CHECK(clique_number(Graph::empty_graph(3)).size == 1);
    CHECK_THROWS_AS(clique_number(Graph::empty_graph(65)), std::invalid_argument);

    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracles::random_graph(2 + rng() % 12, 0.5, rng);
        CliqueResult r = clique_number(g);
        CHECK(r.size == oracles::max_clique_size(g));
        CHECK(g.is_clique(r.witness));
        CHECK(r.witness.count() == r.size);
    }
}

TEST_CASE("bounded clique decision matches exact size") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(3 + rng() % 10, 0.5, rng);
        std::size_t omega = clique_number(g).size;
        for (std::size_t target = 1; target <= omega + 1; ++target) {
            auto found = find_clique_of_size(g, target);
            CHECK(found.has_value() == (target <= omega));
            if (found) {
                CHECK(g.is_clique(*found));
                CHECK(found->count() >= target);
            }
        }
    }
}

TEST_CASE("figure-3 style graph: clique number two with a triple of edges") {
    IIMGraph h = figure3_graph();
    CHECK(h.vertex_count() == 8);
    CHECK(clique_number(h.graph()).size == 2);

    NonAdjacentTriple t;
    t.parts = {VertexSet::of(8, {0, 2}), VertexSet::of(8, {3, 6}), VertexSet::of(8, {1, 4})};
    t.witnesses = {2, 3, 1};
    CHECK(validate_triple(h.graph(), t, 2));

    auto found = find_non_adjacent_triple(h.graph(), 2);
    REQUIRE(found.has_value());
    CHECK(validate_triple(h.graph(), *found, 2));
}

TEST_CASE("no triple inside complete graphs") {
    CHECK(!find_non_adjacent_triple(Graph::complete(6), 2).has_value());
    CHECK(!find_non_adjacent_triple(Graph::complete(3), 1).has_value());
}

TEST_CASE("clique lower bound formula") {
    CHECK(clique_lower_bound(5) == 2);
    CHECK(clique_lower_bound(6) == 3);
    CHECK(clique_lower_bound(7) == 4);
    CHECK(clique_lower_bound(8) == 4);
    CHECK(clique_lower_bound(4) == 2);
    CHECK(clique_lower_bound(0) == -1);  // raw formula, reported alongside the trivial bound
    CHECK(trivial_chain_bound(4) == 3);
    CHECK(trivial_chain_bound(5) == 3);
}

TEST_CASE("log star") {
    CHECK(log_star(1) == 0);
    CHECK(log_star(2) == 1);
    CHECK(log_star(3) == 2);
    CHECK(log_star(4) == 2);
    CHECK(log_star(5) == 3);
    CHECK(log_star(16) == 3);
    CHECK(log_star(17) == 4);
    CHECK(log_star(65536) == 4);
    CHECK(log_star(65537) == 5);
    CHECK_THROWS_AS(log_star(0), std::invalid_argument);
}

TEST_CASE("grow_triple: the three proof cases explicitly") {
    IIMGraph h = figure3_graph();
    auto t = find_non_adjacent_triple(h.graph(), 2);
    REQUIRE(t.has_value());
    const std::size_t n = h.vertex_count();

    SUBCASE("all witnesses cloned") {
        LevelChoice c(n, Choice::clone);
        NonAdjacentTriple b = grow_triple(h, *t, c);
        IIMGraph stepped = iim_step(h, c);
        CHECK(validate_triple(stepped.graph(), b));
        CHECK(b.parts[0].count() + b.parts[1].count() + b.parts[2].count() == 8);
    }
    SUBCASE("all witnesses anticloned") {
        LevelChoice c(n, Choice::anticlone);
        NonAdjacentTriple b = grow_triple(h, *t, c);
        IIMGraph stepped = iim_step(h, c);
        CHECK(validate_triple(stepped.graph(), b));
        CHECK(b.parts[0].count() + b.parts[1].count() + b.parts[2].count() == 9);
    }
    SUBCASE("exactly one witness cloned") {
        LevelChoice c(n, Choice::anticlone);
        c[t->witnesses[0]] = Choice::clone;
        NonAdjacentTriple b = grow_triple(h, *t, c);
        IIMGraph stepped = iim_step(h, c);
        CHECK(validate_triple(stepped.graph(), b));
        CHECK(b.parts[0].count() + b.parts[1].count() + b.parts[2].count() == 8);
    }
    SUBCASE("invalid triple rejected") {
        NonAdjacentTriple bad = *t;
        bad.witnesses[0] = bad.parts[1].first();  // witness outside its part
        CHECK_THROWS_AS(grow_triple(h, bad, LevelChoice(n, Choice::clone)), std::invalid_argument);
    }
}

TEST_CASE("grow_triple property over random hosts and fills") {
    VerificationReport rep = verify_grow_triple(12, 73);
    CHECK(rep.passed());
    CHECK(rep.checked == 12 * 8);
}

TEST_CASE("slow growth construction keeps omega at or below the level count") {
    SlowGrowthResult r0 = construct_slow_clique_growth(0);
    CHECK(r0.omega_by_level == std::vector<std::size_t>{1});

    SlowGrowthResult r3 = construct_slow_clique_growth(3);
    CHECK(r3.stalled_at == -1);
    CHECK(r3.omega_by_level.back() <= 3);

    SlowGrowthResult r4 = construct_slow_clique_growth(4);
    CHECK(r4.stalled_at == -1);
    CHECK(r4.omega_by_level.back() <= 4);
    for (std::size_t i = 1; i < r4.omega_by_level.size(); ++i)
        CHECK(r4.omega_by_level[i] <= r4.omega_by_level[i - 1] + 1);

    // the schedule should do no worse than the best exhaustive growth
    IimEnumerator en(Graph::complete(1), 4);
    IIMGraph h;
    std::size_t min_omega = SIZE_MAX;
    while (en.next(nullptr, &h)) min_omega = std::min(min_omega, clique_number(h.graph()).size);
    CHECK(r4.omega_by_level.back() >= min_omega);
    CHECK_THROWS_AS(construct_slow_clique_growth(9), std::invalid_argument);
}

TEST_CASE("chain bound alongside the formula on sampled deep runs") {
    std::mt19937_64 rng(74);
    for (int k : {6, 7}) {
        for (int trial = 0; trial < 5; ++trial) {
            SampleResult s = sample_iim(Graph::complete(1), k, 0.5, rng());
            int bound = std::max({clique_lower_bound(k), trivial_chain_bound(k), 1});
            CHECK(find_clique_of_size(s.graph.graph(), bound).has_value());
        }
    }
}
