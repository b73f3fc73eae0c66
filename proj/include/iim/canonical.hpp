#pragma once

#include <string>

#include "iim/graph.hpp"

namespace iim {

inline constexpr std::size_t kCanonicalKeyLimit = 12;

/// Isomorphism-invariant key: two graphs yield equal keys iff isomorphic.
/// Exact backend minimizes the adjacency bit-matrix lexicographically over
/// all degree-compatible vertex orders; intended for n <= limit.
std::string canonical_key(const Graph& g, std::size_t limit = kCanonicalKeyLimit);

}  // namespace iim
