#include "doctest.h"

#include <random>

#include "iim/induced.hpp"
#include "iim/verify.hpp"
#include "oracles.hpp"

using namespace iim;

TEST_CASE("contains_induced on named instances") {
    CHECK(contains_induced(Graph::path(4), Graph::path(3)).has_value());
    CHECK(!contains_induced(Graph::complete(4), Graph::empty_graph(2)).has_value());
    CHECK(!contains_induced(Graph::cycle(5), Graph::cycle(4)).has_value());
    CHECK(contains_induced(Graph::cycle(6), Graph::path(4)).has_value());
    CHECK_THROWS_AS(contains_induced(Graph::complete(12), Graph::complete(11)),
                    std::invalid_argument);
}

TEST_CASE("contains_induced agrees with subset enumeration") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 25; ++trial) {
        Graph host = oracles::random_graph(4 + rng() % 5, 0.5, rng);
        Graph pattern = oracles::random_graph(2 + rng() % 3, 0.5, rng);
        auto got = contains_induced(host, pattern);
        CHECK(got.has_value() == oracles::has_induced(host, pattern));
        if (got) CHECK(validate_embedding(host, pattern, *got));
    }
}

TEST_CASE("embedding validator rejects wrong maps") {
    Graph host = Graph::path(4);
    Graph pattern = Graph::path(3);
    CHECK(validate_embedding(host, pattern, InducedEmbedding{{0, 1, 2}}));
    CHECK(!validate_embedding(host, pattern, InducedEmbedding{{0, 1, 3}}));  // drops an edge
    CHECK(!validate_embedding(host, pattern, InducedEmbedding{{0, 0, 1}}));  // not injective
    CHECK(!validate_embedding(host, pattern, InducedEmbedding{{0, 1}}));     // wrong arity
}

TEST_CASE("ladder extraction: identity for complete patterns") {
    IIMGraph h = iim_generate(Graph::complete(3), ChoiceSequence::parse("L1=0x7"));
    LadderWitness w;
    w.levels = {0};
    w.members = VertexSet::of(6, {0, 1, 2});
    InducedEmbedding e = lemma_ladder_extract(h, Graph::complete(3), w);
    CHECK(e.map == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("ladder extraction removes the K2 edge at level one") {
    // K_2 cloned once: the two clones are non-adjacent and give 2K1
    IIMGraph h = iim_generate(Graph::complete(2), ChoiceSequence::parse("L1=0x0"));
    LadderWitness w;
    w.levels = {0, 1};
    w.members = VertexSet::of(4, {0, 1, 2, 3});
    InducedEmbedding e = lemma_ladder_extract(h, Graph::empty_graph(2), w);
    CHECK(e.map == std::vector<std::uint32_t>{2, 3});
    CHECK(validate_embedding(h.graph(), Graph::empty_graph(2), e));
}

TEST_CASE("ladder extraction finds P3 inside an all-clone K3 run") {
    IIMGraph h = iim_generate(Graph::complete(3), ChoiceSequence::parse("L1=0x0"));
    LadderWitness w;
    w.levels = {0, 1};
    w.members = VertexSet::of(6, {0, 1, 2, 3, 4, 5});
    InducedEmbedding e = lemma_ladder_extract(h, Graph::path(3), w);
    CHECK(validate_embedding(h.graph(), Graph::path(3), e));
    auto oracle = contains_induced(h.graph(), Graph::path(3));
    CHECK(oracle.has_value());
}

TEST_CASE("ladder witness violations are named") {
    IIMGraph h = iim_generate(Graph::complete(2), ChoiceSequence::parse("L1=0x1"));
    LadderWitness w;
    w.levels = {0, 1};
    w.members = VertexSet::of(4, {0, 1, 2, 3});
    try {
        lemma_ladder_extract(h, Graph::empty_graph(2), w);
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("condition 4") != std::string::npos);
    }

    LadderWitness bad_start;
    bad_start.levels = {1};
    bad_start.members = VertexSet(4);
    CHECK_THROWS_AS(lemma_ladder_extract(h, Graph::complete(2), bad_start), std::invalid_argument);
}

TEST_CASE("parity search: complete pattern embeds immediately") {
    IIMGraph h = iim_generate(Graph::complete(3), ChoiceSequence::parse("L1=0x5"));
    ParityOutcome out = find_induced_via_parity(h, Graph::complete(3));
    REQUIRE(std::holds_alternative<InducedEmbedding>(out));
    CHECK(std::get<InducedEmbedding>(out).map == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("parity search: clones remove the K2 edge") {
    IIMGraph h = iim_generate(Graph::complete(2), ChoiceSequence::parse("L1=0x0"));
    ParityOutcome out = find_induced_via_parity(h, Graph::empty_graph(2));
    REQUIRE(std::holds_alternative<InducedEmbedding>(out));
    const auto& e = std::get<InducedEmbedding>(out);
    CHECK(e.map == std::vector<std::uint32_t>{2, 3});
    CHECK(validate_embedding(h.graph(), Graph::empty_graph(2), e));
}

TEST_CASE("parity search: blocked on a too-shallow host reports sound progress") {
    // one anticlone level from K_2: level 1 holds only odd-parity copies
    IIMGraph h = iim_generate(Graph::complete(2), ChoiceSequence::parse("L1=0x3"));
    ParityOutcome out = find_induced_via_parity(h, Graph::empty_graph(2));
    REQUIRE(std::holds_alternative<ProgressState>(out));
    const auto& p = std::get<ProgressState>(out);
    CHECK(p.removed.empty());
    CHECK(p.blocked_edge == std::pair<int, int>{0, 1});
    CHECK(validate_blocking(h, p));
}

TEST_CASE("parity search across sampled hosts, with certificates checked") {
    VerificationReport rep = verify_induced(12, 92);
    CHECK(rep.passed());
    CHECK(rep.parameters["ladder_embeddings"] == 4 * 12);
}
