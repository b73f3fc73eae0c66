#include "doctest.h"

#include <random>

#include "iim/distance.hpp"
#include "iim/generator.hpp"
#include "iim/verify.hpp"
#include "oracles.hpp"

using namespace iim;

TEST_CASE("diameter basics") {
    CHECK(diameter(Graph::path(4)) == 3);
    CHECK(diameter(Graph::complete(5)) == 1);
    CHECK(diameter(Graph::complete(1)) == 0);
    CHECK(!diameter(Graph::disjoint_union({Graph::complete(2), Graph::complete(1)})).has_value());
}

TEST_CASE("distance matrix symmetry, diagonal, triangle inequality") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = oracles::random_graph(2 + rng() % 9, 0.45, rng);
        DistanceMatrix d(g);
        const std::size_t n = g.vertex_count();
        for (std::uint32_t u = 0; u < n; ++u) {
            CHECK(d.at(u, u) == 0);
            for (std::uint32_t v = 0; v < n; ++v) {
                CHECK(d.at(u, v) == d.at(v, u));
                for (std::uint32_t w = 0; w < n; ++w) {
                    if (d.at(u, v) == kUnreachable || d.at(v, w) == kUnreachable ||
                        d.at(u, w) == kUnreachable)
                        continue;
                    CHECK(d.at(u, w) <= d.at(u, v) + d.at(v, w));
                }
            }
        }
    }
}

TEST_CASE("eccentricity") {
    DistanceMatrix d(Graph::path(4));
    CHECK(d.eccentricity(0) == 3);
    CHECK(d.eccentricity(1) == 2);
    DistanceMatrix dd(Graph::disjoint_union({Graph::complete(2), Graph::complete(1)}));
    CHECK(!dd.eccentricity(0).has_value());
}

TEST_CASE("diameter theorem on P4: bound five is met and tight") {
    VerificationReport rep = verify_diameter(Graph::path(4), "P4", 1);
    CHECK(rep.passed());
    CHECK(rep.bound == 5);
    CHECK(rep.max_observed == 5.0);  // Figure-2 style witness exists
    CHECK(rep.checked + rep.skipped == 16);
}

TEST_CASE("diameter theorem on the disconnected seed: bound six, tight") {
    Graph seed = Graph::disjoint_union({Graph::complete(2), Graph::complete(2), Graph::complete(1)});
    VerificationReport rep = verify_diameter(seed, "K2uK2uK1", 1);
    CHECK(rep.passed());
    CHECK(rep.bound == 6);
    CHECK(rep.max_observed == 6.0);
    CHECK(rep.checked + rep.skipped == 32);
}

TEST_CASE("diameter theorem on K3") {
    VerificationReport rep = verify_diameter(Graph::complete(3), "K3", 1);
    CHECK(rep.passed());
    CHECK(rep.bound == 5);
    CHECK(*rep.max_observed <= 5.0);
}

TEST_CASE("sampled diameter corollary stays within max(diam, 6)") {
    for (const auto& [seed, name] : {std::pair{Graph::path(4), "P4"}, {Graph::cycle(5), "C5"},
                                     {Graph::path(6), "P6"}}) {
        VerificationReport rep = verify_diameter_corollary(seed, name, 3, 60, 0.5, 99);
        CHECK(rep.passed());
    }
}
