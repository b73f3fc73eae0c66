#include "iim/clique.hpp"

#include <algorithm>
#include <stdexcept>

namespace iim {

namespace {

// Tomita-style expansion: candidates are greedily colored, highest color
// first, so current.size() + color is an upper bound for the branch.
struct CliqueSolver {
    const Graph& g;
    std::size_t n;
    VertexSet best;
    std::size_t stop_at;  // end search once best reaches this (0 = never)
    bool done = false;

    CliqueSolver(const Graph& graph, std::size_t target)
        : g(graph), n(graph.vertex_count()), best(graph.vertex_count()), stop_at(target) {}

    void expand(const VertexSet& cand, VertexSet& current, std::size_t depth) {
        if (done) return;
        if (cand.empty()) {
            if (depth > best.count()) {
                best = current;
                if (stop_at && best.count() >= stop_at) done = true;
            }
            return;
        }
        // greedy coloring of the candidate set
        std::vector<std::uint32_t> order;
        std::vector<std::size_t> color;
        VertexSet uncolored = cand;
        std::size_t color_class = 0;
        while (!uncolored.empty()) {
            ++color_class;
            VertexSet avail = uncolored;
            while (!avail.empty()) {
                std::uint32_t v = avail.first();
                order.push_back(v);
                color.push_back(color_class);
                avail.reset(v);
                avail -= g.neighbors(v);
                uncolored.reset(v);
            }
        }
        VertexSet remaining = cand;
        for (std::size_t i = order.size(); i-- > 0;) {
            if (done) return;
            if (depth + color[i] <= best.count()) return;
            std::uint32_t v = order[i];
            current.set(v);
            VertexSet next = remaining & g.neighbors(v);
            expand(next, current, depth + 1);
            current.reset(v);
            remaining.reset(v);
        }
    }
};

// list all cliques matching the maximum size
void enumerate_max(const Graph& g, const VertexSet& cand, VertexSet& current, std::size_t depth,
                   std::size_t target, std::vector<VertexSet>& out, std::size_t cap) {
    if (depth == target) {
        if (out.size() >= cap) throw std::runtime_error("maximum_cliques: cap exceeded");
        out.push_back(current);
        return;
    }
    if (depth + cand.count() < target) return;
    VertexSet remaining = cand;
    for (std::uint32_t v = remaining.first(); v != VertexSet::npos; v = remaining.next(v)) {
        current.set(v);
        VertexSet next = remaining & g.neighbors(v);
        // keep ids ascending inside each clique to avoid duplicates
        VertexSet above(next.universe());
        for (std::uint32_t u = next.next(v); u != VertexSet::npos; u = next.next(u)) above.set(u);
        enumerate_max(g, above, current, depth + 1, target, out, cap);
        current.reset(v);
    }
}

}  // namespace

CliqueResult clique_number(const Graph& g, std::size_t limit) {
    if (g.vertex_count() > limit)
        throw std::invalid_argument("clique_number: n=" + std::to_string(g.vertex_count()) +
                                    " exceeds exact solver limit " + std::to_string(limit));
    CliqueSolver solver(g, 0);
    VertexSet current(g.vertex_count());
    solver.expand(g.all_vertices(), current, 0);
    return {solver.best.count(), solver.best};
}

std::optional<VertexSet> find_clique_of_size(const Graph& g, std::size_t target) {
    if (target == 0) return VertexSet(g.vertex_count());
    CliqueSolver solver(g, target);
    VertexSet current(g.vertex_count());
    solver.expand(g.all_vertices(), current, 0);
    if (solver.best.count() >= target) return solver.best;
    return std::nullopt;
}

std::vector<VertexSet> maximum_cliques(const Graph& g, std::size_t cap) {
    std::size_t omega = clique_number(g).size;
    std::vector<VertexSet> out;
    VertexSet current(g.vertex_count());
    enumerate_max(g, g.all_vertices(), current, 0, omega, out, cap);
    return out;
}

int clique_lower_bound(int k) {
    int a = 2 * (k - 5);
    int ceil_third = a >= 0 ? (a + 2) / 3 : -((-a) / 3);
    return 2 + ceil_third;
}

int trivial_chain_bound(int l) { return (l + 2) / 2; }

int log_star(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("log_star: n must be positive");
    // towers 2^^k: 1, 2, 4, 16, 65536; log*(n) = least k with n <= 2^^k
    if (n <= 1) return 0;
    if (n <= 2) return 1;
    if (n <= 4) return 2;
    if (n <= 16) return 3;
    if (n <= 65536) return 4;
    return 5;
}

}  // namespace iim
