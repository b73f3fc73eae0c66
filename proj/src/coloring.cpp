#include "iim/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "iim/clique.hpp"

namespace iim {

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.color.size() != g.vertex_count()) return false;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        if (c.color[v] < 0 || c.color[v] >= c.palette) return false;
        const VertexSet& nb = g.neighbors(v);
        for (std::uint32_t u = nb.next(v); u != VertexSet::npos; u = nb.next(u))
            if (c.color[u] == c.color[v]) return false;
    }
    return true;
}

namespace {

struct ChromaticSearch {
    const Graph& g;
    int limit;  // colors allowed this round
    std::vector<std::uint32_t> order;
    std::vector<int> assigned;
    int preset;  // first `preset` vertices in order are fixed 0,1,2,...

    bool color_from(std::size_t idx, int used) {
        if (idx == order.size()) return true;
        std::uint32_t v = order[idx];
        int cap = std::min(limit, used + 1);  // new color symmetry break
        for (int col = 0; col < cap; ++col) {
            bool ok = true;
            const VertexSet& nb = g.neighbors(v);
            for (std::uint32_t u = nb.first(); u != VertexSet::npos; u = nb.next(u))
                if (assigned[u] == col) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            assigned[v] = col;
            if (color_from(idx + 1, std::max(used, col + 1))) return true;
            assigned[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::pair<int, Coloring> chromatic_number(const Graph& g, std::size_t limit) {
    const std::size_t n = g.vertex_count();
    if (n > limit)
        throw std::invalid_argument("chromatic_number: n=" + std::to_string(n) +
                                    " exceeds exact solver limit " + std::to_string(limit));
    if (n == 0) return {0, Coloring{}};

    CliqueResult clique = clique_number(g);
    std::vector<std::uint32_t> order = clique.witness.members();
    {
        std::vector<std::uint32_t> rest;
        for (std::uint32_t v = 0; v < n; ++v)
            if (!clique.witness.test(v)) rest.push_back(v);
        std::sort(rest.begin(), rest.end(), [&](std::uint32_t a, std::uint32_t b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        });
        order.insert(order.end(), rest.begin(), rest.end());
    }

    for (int k = static_cast<int>(clique.size); k <= static_cast<int>(n); ++k) {
        ChromaticSearch search{g, k, order, std::vector<int>(n, -1), static_cast<int>(clique.size)};
        for (int i = 0; i < search.preset; ++i) search.assigned[order[i]] = i;
        if (search.color_from(clique.size, static_cast<int>(clique.size))) {
            Coloring c{std::move(search.assigned), k};
            return {k, c};
        }
    }
    throw std::logic_error("chromatic_number: unreachable");
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> find_rainbow_pair(const Graph& g,
                                                                          const Coloring& c) {
    if (!is_proper(g, c)) throw std::invalid_argument("find_rainbow_pair: improper coloring");
    const std::size_t n = g.vertex_count();
    auto has_all_colors = [&](const VertexSet& s) {
        std::vector<bool> seen(c.palette, false);
        int distinct = 0;
        for (std::uint32_t v = s.first(); v != VertexSet::npos; v = s.next(v)) {
            if (!seen[c.color[v]]) {
                seen[c.color[v]] = true;
                ++distinct;
            }
        }
        return distinct == c.palette;
    };
    std::uint32_t found = VertexSet::npos;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (!has_all_colors(g.closed_neighborhood(v))) continue;
        if (!has_all_colors(g.anti_neighborhood(v))) continue;
        if (found == VertexSet::npos) {
            found = v;
        } else {
            return std::make_pair(found, v);
        }
    }
    return std::nullopt;
}

ExtensionResult extend_coloring(const IIMGraph& h_before, const Coloring& c,
                                const LevelChoice& choice) {
    if (!is_proper(h_before.graph(), c))
        throw std::invalid_argument("extend_coloring: improper coloring of the base graph");
    IIMGraph h = iim_step(h_before, choice);
    const std::size_t n_old = h_before.vertex_count();
    const std::size_t n_new = h.vertex_count();

    Coloring out;
    out.color = c.color;
    out.color.resize(n_new, -1);
    out.palette = c.palette;

    // the new level is independent, so each vertex only competes with old
    // colors; one shared fresh color covers everyone who has no free one
    for (std::uint32_t v = static_cast<std::uint32_t>(n_old); v < n_new; ++v) {
        std::vector<bool> used(c.palette, false);
        const VertexSet& nb = h.graph().neighbors(v);
        for (std::uint32_t u = nb.first(); u != VertexSet::npos; u = nb.next(u))
            if (u < n_old) used[c.color[u]] = true;
        int pick = -1;
        for (int col = 0; col < c.palette; ++col)
            if (!used[col]) {
                pick = col;
                break;
            }
        if (pick < 0) {
            pick = c.palette;  // the shared new color
            out.palette = c.palette + 1;
        }
        out.color[v] = pick;
    }
    return {std::move(h), std::move(out)};
}

}  // namespace iim
