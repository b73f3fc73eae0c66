#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iim/graph.hpp"

namespace iim {

inline constexpr std::size_t kExactCliqueLimit = 64;

struct CliqueResult {
    std::size_t size = 0;
    VertexSet witness;
};

/// Exact maximum clique, branch and bound with greedy-coloring upper bounds.
CliqueResult clique_number(const Graph& g, std::size_t limit = kExactCliqueLimit);

/// Exact decision: a clique of the requested size, or nullopt when none
/// exists. Terminates the branch and bound as soon as the target is reached.
std::optional<VertexSet> find_clique_of_size(const Graph& g, std::size_t target);

/// All maximum cliques, capped; throws when the cap is exceeded.
std::vector<VertexSet> maximum_cliques(const Graph& g, std::size_t cap = 4096);

/// 2 + ceil(2(k-5)/3), the guaranteed clique size after k steps from K_1.
/// Returned raw; small k gives values below the trivial chain bound.
int clique_lower_bound(int k);

/// ceil((l+1)/2): the clone/anticlone chain bound on the clique number.
int trivial_chain_bound(int l);

/// Iterations of base-2 log until the value is at most 1 (log*(1) = 0).
int log_star(std::uint64_t n);

}  // namespace iim
