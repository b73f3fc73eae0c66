#include "iim/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace iim {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) {
    adj_.assign(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!adj_[u].test(v)) {
            adj_[u].set(v);
            adj_[v].set(u);
            ++m_;
        }
    }
}

Graph::Graph(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {
    const std::size_t n = adj_.size();
    for (std::uint32_t v = 0; v < n; ++v) {
        if (adj_[v].universe() != n) throw std::invalid_argument("adjacency row universe mismatch");
        if (adj_[v].test(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        for (std::uint32_t u = adj_[v].first(); u != VertexSet::npos; u = adj_[v].next(u)) {
            if (!adj_[u].test(v)) throw std::invalid_argument("asymmetric adjacency");
            if (u > v) ++m_;
        }
    }
}

Graph Graph::empty_graph(std::size_t n) { return Graph(n, {}); }

Graph Graph::complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, e);
}

Graph Graph::path(std::size_t n) {
    std::vector<Edge> e;
    for (std::uint32_t v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    return Graph(n, e);
}

Graph Graph::cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (std::uint32_t v = 0; v < n; ++v) e.push_back({v, static_cast<std::uint32_t>((v + 1) % n)});
    return Graph(n, e);
}

Graph Graph::disjoint_union(const std::vector<Graph>& parts) {
    std::size_t n = 0;
    std::vector<Edge> e;
    for (const auto& g : parts) {
        for (auto [u, v] : g.edges())
            e.push_back({static_cast<std::uint32_t>(u + n), static_cast<std::uint32_t>(v + n)});
        n += g.vertex_count();
    }
    return Graph(n, e);
}

VertexSet Graph::closed_neighborhood(std::uint32_t v) const {
    check_vertex(v);
    VertexSet s = adj_[v];
    s.set(v);
    return s;
}

VertexSet Graph::anti_neighborhood(std::uint32_t v) const {
    check_vertex(v);
    return closed_neighborhood(v).complement();
}

std::size_t Graph::edge_count_between(const VertexSet& x, const VertexSet& y) const {
    std::size_t cross2 = 0;  // ordered endpoint pairs
    for (std::uint32_t v = x.first(); v != VertexSet::npos; v = x.next(v))
        cross2 += (adj_[v] & y).count();
    std::size_t both2 = 0;  // pairs with both endpoints in x∩y, counted twice
    VertexSet xy = x & y;
    for (std::uint32_t v = xy.first(); v != VertexSet::npos; v = xy.next(v))
        both2 += (adj_[v] & xy).count();
    // cross2 counts an x∩y internal edge twice and every other qualifying edge once.
    return cross2 - both2 / 2;
}

InducedSubgraph Graph::induced_subgraph(const VertexSet& x) const {
    std::vector<std::uint32_t> map = x.members();
    const std::size_t k = map.size();
    std::vector<std::uint32_t> inv(vertex_count(), VertexSet::npos);
    for (std::uint32_t i = 0; i < k; ++i) inv[map[i]] = i;
    std::vector<Edge> e;
    for (std::uint32_t i = 0; i < k; ++i) {
        VertexSet nb = adj_[map[i]] & x;
        for (std::uint32_t u = nb.first(); u != VertexSet::npos; u = nb.next(u))
            if (inv[u] > i) e.push_back({i, inv[u]});
    }
    return {Graph(k, e), std::move(map)};
}

bool Graph::is_clique(const VertexSet& x) const {
    for (std::uint32_t v = x.first(); v != VertexSet::npos; v = x.next(v)) {
        VertexSet rest = x;
        rest.reset(v);
        if (!rest.subset_of(adj_[v])) return false;
    }
    return true;
}

bool Graph::is_independent(const VertexSet& x) const {
    for (std::uint32_t v = x.first(); v != VertexSet::npos; v = x.next(v))
        if (adj_[v].intersects(x)) return false;
    return true;
}

VertexSet Graph::component_of(std::uint32_t v) const {
    check_vertex(v);
    VertexSet seen(vertex_count());
    seen.set(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(vertex_count());
        for (std::uint32_t u = frontier.first(); u != VertexSet::npos; u = frontier.next(u))
            next |= adj_[u];
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool Graph::is_connected() const {
    if (vertex_count() == 0) return true;
    return component_of(0).count() == vertex_count();
}

VertexSet Graph::isolated_vertices() const {
    VertexSet s(vertex_count());
    for (std::uint32_t v = 0; v < vertex_count(); ++v)
        if (adj_[v].empty()) s.set(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> e;
    e.reserve(m_);
    for (std::uint32_t v = 0; v < vertex_count(); ++v)
        for (std::uint32_t u = adj_[v].next(v); u != VertexSet::npos; u = adj_[v].next(u))
            e.push_back({v, u});
    return e;
}

std::string Graph::to_edge_list() const {
    std::ostringstream os;
    os << vertex_count() << ' ' << edge_count() << '\n';
    for (auto [u, v] : edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph Graph::from_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("edge list parse error at line " + std::to_string(lineno) + ": " + why);
    };
    std::size_t n = 0, m = 0;
    bool have_header = false;
    std::vector<Edge> e;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (!have_header) {
            if (!(ls >> n >> m)) fail("expected \"n m\" header");
            have_header = true;
            continue;
        }
        if (line.empty()) continue;
        std::uint32_t u, v;
        if (!(ls >> u >> v)) fail("expected \"u v\"");
        e.push_back({u, v});
    }
    if (!have_header) fail("empty input");
    if (e.size() != m)
        throw std::runtime_error("edge list parse error: header promised " + std::to_string(m) +
                                 " edges, found " + std::to_string(e.size()));
    return Graph(n, e);
}

std::string Graph::to_dot() const {
    std::ostringstream os;
    os << "graph g {\n";
    for (std::uint32_t v = 0; v < vertex_count(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

void Graph::check_vertex(std::uint32_t v) const {
    if (v >= vertex_count()) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

}  // namespace iim
