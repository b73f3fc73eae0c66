#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iim/graph.hpp"

namespace iim {

inline constexpr int kUnreachable = -1;

/// Hop counts from source to every vertex; kUnreachable where disconnected.
std::vector<int> bfs_distances(const Graph& g, std::uint32_t source);

/// All-pairs hop counts from per-vertex BFS.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    std::size_t order() const { return n_; }
    int at(std::uint32_t u, std::uint32_t v) const { return d_[u * n_ + v]; }

    /// Max distance from v; nullopt when some vertex is unreachable.
    std::optional<int> eccentricity(std::uint32_t v) const;

private:
    std::size_t n_;
    std::vector<int> d_;
};

/// Max pairwise distance; nullopt means infinite (disconnected). The 0- and
/// 1-vertex graphs have diameter 0.
std::optional<int> diameter(const Graph& g);

}  // namespace iim
