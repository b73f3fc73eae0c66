#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "iim/generator.hpp"
#include "iim/graph.hpp"

namespace iim {

inline constexpr std::size_t kTripleSearchLimit = 24;

/// Disjoint sets A_1, A_2, A_3 with witnesses v_i in A_i, each v_i
/// non-adjacent to every vertex of A_{i+1 mod 3}.
struct NonAdjacentTriple {
    std::array<VertexSet, 3> parts;
    std::array<std::uint32_t, 3> witnesses;
};

/// Full definition check; clique_size > 0 additionally requires each part to
/// induce a clique of exactly that size.
bool validate_triple(const Graph& g, const NonAdjacentTriple& t, std::size_t clique_size = 0);

/// Exact search for a triple whose parts induce cliques of size clique_size,
/// pruning on witness anti-neighborhoods. Deterministic; nullopt only when no
/// such triple exists.
std::optional<NonAdjacentTriple> find_non_adjacent_triple(const Graph& g, std::size_t clique_size,
                                                          std::size_t limit = kTripleSearchLimit);

/// The growth step behind the clique bound: given a triple in h and any
/// clone/anticlone choices for the next level, returns a triple in
/// iim_step(h, c) whose parts extend the old ones, with at least two parts
/// grown by one vertex.
NonAdjacentTriple grow_triple(const IIMGraph& h, const NonAdjacentTriple& t, const LevelChoice& c);

struct SlowGrowthResult {
    ChoiceSequence sequence;
    IIMGraph graph;
    std::vector<std::size_t> omega_by_level;  // omega(H_0), ..., omega(H_l)
    int stalled_at = -1;                      // level where the tuple shrank below 2, or -1
};

/// The slow-clique-growth schedule from K_1: at each level, anticlone one
/// group of a maximal non-adjacent tuple of maximum cliques and clone the
/// vertices non-adjacent to it. Asserts omega grows by at most one per level.
SlowGrowthResult construct_slow_clique_growth(int steps, int step_budget = 8);

}  // namespace iim
