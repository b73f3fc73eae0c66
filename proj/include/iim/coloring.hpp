#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "iim/generator.hpp"
#include "iim/graph.hpp"

namespace iim {

inline constexpr std::size_t kExactChromaticLimit = 20;

struct Coloring {
    std::vector<int> color;  // per vertex, 0-based
    int palette = 0;         // number of colors in use
};

bool is_proper(const Graph& g, const Coloring& c);

/// Exact chromatic number with a witness coloring; backtracking seeded by a
/// maximum clique.
std::pair<int, Coloring> chromatic_number(const Graph& g,
                                          std::size_t limit = kExactChromaticLimit);

/// Two vertices that each see every color in their closed neighborhood and
/// every color in their anti-neighborhood; throws on an improper coloring.
std::optional<std::pair<std::uint32_t, std::uint32_t>> find_rainbow_pair(const Graph& g,
                                                                          const Coloring& c);

struct ExtensionResult {
    IIMGraph graph;  // h after the step
    Coloring coloring;
};

/// Applies one IIM step and colors only the new level with the fewest colors
/// an extension allows: each new vertex takes its lowest free old color, and
/// the vertices with no free old color share one new color.
ExtensionResult extend_coloring(const IIMGraph& h_before, const Coloring& c,
                                const LevelChoice& choice);

}  // namespace iim
