#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "iim/generator.hpp"
#include "iim/graph.hpp"

namespace iim {

inline constexpr std::size_t kInducedPatternLimit = 10;

struct InducedEmbedding {
    std::vector<std::uint32_t> map;  // pattern vertex -> host vertex, injective

    /// "0:4 1:9 2:17" — report serialization.
    std::string to_string() const;
};

/// Definition check: the map is injective and preserves both edges and
/// non-edges. Independent of how an embedding was produced.
bool validate_embedding(const Graph& host, const Graph& pattern, const InducedEmbedding& e);

/// Exact backtracking search with adjacency-consistency pruning.
std::optional<InducedEmbedding> contains_induced(const Graph& host, const Graph& pattern,
                                                 std::size_t pattern_limit = kInducedPatternLimit);

/// Clone-ladder witness. In the plain form `base` is empty and the ladder is
/// anchored at level 0 (which must induce a complete graph and belong to
/// `members`); the rooted form names an explicit base clique, one vertex per
/// pattern vertex, as used by the parity search fallback.
struct LadderWitness {
    std::vector<int> levels;           // ascending; plain form starts at 0
    VertexSet members;                 // U
    std::vector<std::uint32_t> base;   // rooted form only
};

/// Walks the witness's clone ladder, replacing the two endpoints of each
/// missing pattern edge by their clones one ladder level at a time, and
/// returns the resulting verified embedding. Throws naming the first violated
/// witness condition.
InducedEmbedding lemma_ladder_extract(const IIMGraph& h, const Graph& pattern,
                                      const LadderWitness& w);

/// Outcome of the parity-guided search on a host too shallow to finish.
struct ProgressState {
    std::vector<std::pair<int, int>> removed;  // pattern edges already removed
    std::vector<std::uint32_t> reps;           // current representatives
    std::pair<int, int> blocked_edge;          // pattern pair that could not be removed
    std::vector<int> odd_levels_i, odd_levels_j;  // levels with no eligible even-parity descendant
    int last_used_level = 0;
};

using ParityOutcome = std::variant<InducedEmbedding, ProgressState>;

/// The two-stage constructive search: remove each missing pattern edge by
/// swapping representatives to even-parity descendants in a common level;
/// when blocked, either hand off to the clone-ladder rooted at the first
/// anticlone (when enough all-odd levels exist) or report progress.
ParityOutcome find_induced_via_parity(const IIMGraph& h, const Graph& pattern);

/// Re-checks a blocking certificate: every listed level really has no
/// eligible even-parity descendant of the corresponding representative.
bool validate_blocking(const IIMGraph& h, const ProgressState& p);

}  // namespace iim
