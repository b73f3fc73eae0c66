#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iim/generator.hpp"
#include "iim/graph.hpp"

namespace iim {

inline constexpr std::size_t kExactHamiltonLimit = 24;
inline constexpr std::size_t kHamPartitionLimit = 20;

bool validate_cycle(const Graph& g, const std::vector<std::uint32_t>& cycle);

/// Exact Hamiltonian cycle by backtracking with reachability and forced-degree
/// pruning; nullopt is definitive within the size limit.
std::optional<std::vector<std::uint32_t>> hamiltonian_cycle(const Graph& g,
                                                            std::size_t limit = kExactHamiltonLimit);

/// Exact Hamiltonian path between fixed endpoints.
std::optional<std::vector<std::uint32_t>> hamiltonian_path(const Graph& g, std::uint32_t from,
                                                           std::uint32_t to);

/// The sufficient-condition partition over H_{l-1}: cloned vertices split into
/// parts inducing Hamiltonian subgraphs, anticloned vertices into independent
/// parts of size >= 3, with connector vertices linking consecutive segments
/// (indices mod k).
struct HamPartition {
    struct Connector {
        std::uint32_t v, w;  // in c_parts[i], v != w, a Hamiltonian v-w path exists
        std::uint32_t u;     // in a_parts[(i+k-1)%k], vu not an edge
        std::uint32_t x;     // in a_parts[i], wx an edge
    };
    std::vector<VertexSet> c_parts, a_parts;
    std::vector<Connector> connectors;  // one per segment index
};

bool validate_partition(const IIMGraph& h, const HamPartition& p);

/// Exhaustive search over partitions and connectors; nullopt is definitive
/// within the size limit.
std::optional<HamPartition> find_ham_partition(const IIMGraph& h,
                                               std::size_t limit = kHamPartitionLimit);

/// Builds the Hamiltonian cycle the partition promises: clone-alternating
/// paths through each C_i, crown paths through each A_i and its anticlones,
/// joined by the connector edges. Validates the result and throws on any
/// inconsistency rather than returning a bad cycle.
std::vector<std::uint32_t> build_cycle_from_partition(const IIMGraph& h, const HamPartition& p);

}  // namespace iim
