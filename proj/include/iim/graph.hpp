#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "iim/vertex_set.hpp"

namespace iim {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

struct InducedSubgraph;

/// Undirected simple graph over dense ids 0..n-1, one bit row per vertex.
/// Immutable after construction; all operations are const.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, const std::vector<Edge>& edges);
    explicit Graph(std::vector<VertexSet> adjacency);

    static Graph empty_graph(std::size_t n);
    static Graph complete(std::size_t n);
    static Graph path(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph disjoint_union(const std::vector<Graph>& parts);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return m_; }

    bool has_edge(std::uint32_t u, std::uint32_t v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(std::uint32_t v) const { return adj_[v]; }
    std::size_t degree(std::uint32_t v) const { return adj_[v].count(); }

    VertexSet closed_neighborhood(std::uint32_t v) const;
    VertexSet anti_neighborhood(std::uint32_t v) const;
    VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

    /// Edges with one endpoint in x and one in y; with x == y each internal
    /// edge is counted once.
    std::size_t edge_count_between(const VertexSet& x, const VertexSet& y) const;

    InducedSubgraph induced_subgraph(const VertexSet& x) const;

    bool is_clique(const VertexSet& x) const;
    bool is_independent(const VertexSet& x) const;
    bool is_connected() const;

    VertexSet component_of(std::uint32_t v) const;
    VertexSet isolated_vertices() const;

    std::vector<Edge> edges() const;

    std::string to_edge_list() const;
    static Graph from_edge_list(const std::string& text);
    std::string to_dot() const;

private:
    void check_vertex(std::uint32_t v) const;

    std::vector<VertexSet> adj_;
    std::size_t m_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<std::uint32_t> vertex_map;  // new id -> old id, ascending
};

}  // namespace iim
