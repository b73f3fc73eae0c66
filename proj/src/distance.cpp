#include "iim/distance.hpp"

#include <algorithm>

namespace iim {

std::vector<int> bfs_distances(const Graph& g, std::uint32_t source) {
    const std::size_t n = g.vertex_count();
    std::vector<int> dist(n, kUnreachable);
    dist[source] = 0;
    VertexSet seen(n);
    seen.set(source);
    VertexSet frontier = seen;
    int hops = 0;
    while (!frontier.empty()) {
        VertexSet next(n);
        for (std::uint32_t u = frontier.first(); u != VertexSet::npos; u = frontier.next(u))
            next |= g.neighbors(u);
        next -= seen;
        ++hops;
        for (std::uint32_t u = next.first(); u != VertexSet::npos; u = next.next(u))
            dist[u] = hops;
        seen |= next;
        frontier = next;
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()), d_(n_ * n_, kUnreachable) {
    for (std::uint32_t v = 0; v < n_; ++v) {
        std::vector<int> row = bfs_distances(g, v);
        std::copy(row.begin(), row.end(), d_.begin() + v * n_);
    }
}

std::optional<int> DistanceMatrix::eccentricity(std::uint32_t v) const {
    int worst = 0;
    for (std::uint32_t u = 0; u < n_; ++u) {
        int d = at(v, u);
        if (d == kUnreachable) return std::nullopt;
        worst = std::max(worst, d);
    }
    return worst;
}

std::optional<int> diameter(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n <= 1) return 0;
    int worst = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        std::vector<int> dist = bfs_distances(g, v);
        for (std::uint32_t u = 0; u < n; ++u) {
            if (dist[u] == kUnreachable) return std::nullopt;
            worst = std::max(worst, dist[u]);
        }
    }
    return worst;
}

}  // namespace iim
