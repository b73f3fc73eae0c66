#pragma once

#include <cstdint>
#include <vector>

#include "iim/generator.hpp"
#include "iim/graph.hpp"

namespace iim {

inline constexpr std::size_t kExactDominationLimit = 40;

struct DominatingSetResult {
    VertexSet set;
    std::size_t size = 0;
    bool is_dual = false;
    /// Per-vertex certificate: a member of `set` in N[v] (v itself when v is
    /// in the set), and, when dual, a member w != v with vw not an edge.
    std::vector<std::uint32_t> dominator;
    std::vector<std::uint32_t> non_neighbor;
    bool used_exact_fallback = false;  // constructive path fell back to the solver
};

bool dominates(const Graph& g, const VertexSet& d);

/// A dominating set where every vertex (members included) also has a
/// non-neighbor in the set; such sets stay dominating through IIM steps.
bool is_dual_dominating(const Graph& g, const VertexSet& d);

/// Fills certificate fields for a set that dominates g.
DominatingSetResult certify(const Graph& g, const VertexSet& d);

/// Exact minimum dominating set by branch and bound (greedy upper bound,
/// coverage-count lower bound).
DominatingSetResult domination_number(const Graph& g, std::size_t limit = kExactDominationLimit);

struct CommonNeighborMin {
    std::size_t value;
    std::uint32_t u, v;  // witnessing non-adjacent pair
};

/// b(G) = min over non-adjacent pairs of |N(u) ∩ N(v)|; throws on complete g.
CommonNeighborMin b_of_g(const Graph& g);

/// The constructive dominating set for graphs grown from a complete seed:
/// clone chain head/tail, a spare level-1 clone, plus either one level-l
/// anticlone (a_l = 0) or all level-l anticlones of seed vertices. Size at
/// most 4, resp. a_l + 3. Falls back to the exact solver (flagged) on the
/// degenerate single-vertex-seed cases.
DominatingSetResult construct_dominating_set_kn(const IIMGraph& h);

}  // namespace iim
