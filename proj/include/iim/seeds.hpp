#pragma once

#include <optional>
#include <string>

#include "iim/graph.hpp"

namespace iim {

/// Built-in acceptance seeds: K1..K8, P2..P8, C3..C8, 2K1, and K2uK2uK1 (the
/// disconnected two-edges-plus-isolate seed).
std::optional<Graph> named_seed(const std::string& name);

std::string named_seed_list();

}  // namespace iim
