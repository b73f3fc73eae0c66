#include "doctest.h"

#include <random>

#include "iim/canonical.hpp"
#include "iim/graph.hpp"
#include "oracles.hpp"

using namespace iim;

TEST_CASE("graph construction and basic accessors") {
    Graph k2(2, {{0, 1}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(0, 1));
    CHECK(k2.has_edge(1, 0));

    Graph p4 = Graph::path(4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.has_edge(1, 2));
    CHECK(!p4.has_edge(0, 2));

    Graph k1 = Graph::complete(1);
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("closed and anti neighborhoods") {
    Graph k2 = Graph::complete(2);
    CHECK(k2.closed_neighborhood(0).members() == std::vector<std::uint32_t>{0, 1});
    CHECK(k2.anti_neighborhood(0).empty());

    Graph k1 = Graph::complete(1);
    CHECK(k1.closed_neighborhood(0).members() == std::vector<std::uint32_t>{0});
    CHECK(k1.anti_neighborhood(0).empty());

    Graph p4 = Graph::path(4);
    CHECK(p4.closed_neighborhood(1).members() == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(p4.anti_neighborhood(0).members() == std::vector<std::uint32_t>{2, 3});
}

TEST_CASE("neighborhood partition property") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracles::random_graph(1 + rng() % 12, 0.4, rng);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            VertexSet closed = g.closed_neighborhood(v);
            VertexSet anti = g.anti_neighborhood(v);
            CHECK(!closed.intersects(anti));
            CHECK((closed | anti).count() == g.vertex_count());
        }
    }
}

TEST_CASE("edge counting between sets") {
    Graph k2 = Graph::complete(2);
    CHECK(k2.edge_count_between(VertexSet::of(2, {0}), VertexSet::of(2, {1})) == 1);

    Graph p4 = Graph::path(4);
    CHECK(p4.edge_count_between(VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})) == 1);

    Graph c4 = Graph::cycle(4);
    CHECK(c4.edge_count_between(c4.all_vertices(), c4.all_vertices()) == 4);
}

TEST_CASE("edge partition identity over random cuts") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + rng() % 11;
        Graph g = oracles::random_graph(n, 0.5, rng);
        VertexSet x = oracles::subset_from_mask(n, static_cast<std::uint32_t>(rng() & ((1u << n) - 1)));
        VertexSet xc = x.complement();
        std::size_t cross = g.edge_count_between(x, xc);
        std::size_t in_x = g.edge_count_between(x, x);
        std::size_t in_xc = g.edge_count_between(xc, xc);
        CHECK(cross + in_x + in_xc == g.edge_count());
    }
}

TEST_CASE("induced subgraphs") {
    Graph p4 = Graph::path(4);
    auto sub = p4.induced_subgraph(VertexSet::of(4, {0, 1, 2}));
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(canonical_key(sub.graph) == canonical_key(Graph::path(3)));

    Graph k4 = Graph::complete(4);
    auto tri = k4.induced_subgraph(VertexSet::of(4, {0, 2, 3}));
    CHECK(canonical_key(tri.graph) == canonical_key(Graph::complete(3)));

    auto empty = p4.induced_subgraph(VertexSet(4));
    CHECK(empty.graph.vertex_count() == 0);
}

TEST_CASE("clique, independence, connectivity predicates") {
    Graph k3 = Graph::complete(3);
    CHECK(k3.is_clique(k3.all_vertices()));
    CHECK(k3.is_independent(VertexSet::of(3, {1})));

    Graph partitioned = Graph::disjoint_union({Graph::complete(2), Graph::complete(2), Graph::complete(1)});
    CHECK(!partitioned.is_connected());
    CHECK(Graph::path(5).is_connected());
    CHECK(Graph::empty_graph(0).is_connected());
    CHECK(partitioned.is_independent(VertexSet::of(5, {0, 2, 4})));
}

TEST_CASE("canonical keys separate and unify small graphs") {
    // same graph under relabeling
    Graph p4a(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph p4b(4, {{2, 0}, {0, 3}, {3, 1}});  // relabeled path
    CHECK(canonical_key(p4a) == canonical_key(p4b));

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_key(p4a) != canonical_key(star));

    CHECK(canonical_key(Graph::complete(3)) == canonical_key(Graph::cycle(3)));

    Graph big = Graph::complete(13);
    CHECK_THROWS_AS(canonical_key(big), std::invalid_argument);
}

TEST_CASE("canonical keys agree with brute-force isomorphism") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 6;
        Graph a = oracles::random_graph(n, 0.5, rng);
        std::vector<std::uint32_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph b = oracles::permuted(a, perm);
        CHECK(canonical_key(a) == canonical_key(b));

        Graph c = oracles::random_graph(n, 0.5, rng);
        CHECK((canonical_key(a) == canonical_key(c)) == oracles::isomorphic(a, c));
    }
}

TEST_CASE("induced on the full vertex set is isomorphic to the original") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(2 + rng() % 7, 0.5, rng);
        auto sub = g.induced_subgraph(g.all_vertices());
        CHECK(canonical_key(sub.graph) == canonical_key(g));
    }
}

TEST_CASE("edge list round trip and parse errors") {
    Graph p4 = Graph::path(4);
    Graph back = Graph::from_edge_list(p4.to_edge_list());
    CHECK(back.vertex_count() == 4);
    CHECK(back.edge_count() == 3);
    CHECK(canonical_key(back) == canonical_key(p4));

    try {
        Graph::from_edge_list("abc\n");
        CHECK(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
    CHECK_THROWS_AS(Graph::from_edge_list("2 1\n0 zzz\n"), std::runtime_error);
    CHECK_THROWS_AS(Graph::from_edge_list("2 5\n0 1\n"), std::runtime_error);
}

TEST_CASE("dot export mentions every edge") {
    Graph c3 = Graph::cycle(3);
    std::string dot = c3.to_dot();
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
    CHECK(dot.find("graph") != std::string::npos);
}
