#include "iim/triples.hpp"

#include <algorithm>
#include <stdexcept>

#include "iim/clique.hpp"

namespace iim {

namespace {

bool witness_ok(const Graph& g, std::uint32_t v, const VertexSet& target) {
    // v non-adjacent to every vertex of target (and not itself a member)
    if (target.test(v)) return false;
    return !g.neighbors(v).intersects(target);
}

void list_cliques_of_size(const Graph& g, std::size_t s, const VertexSet& cand, VertexSet& cur,
                          std::vector<VertexSet>& out) {
    if (cur.count() == s) {
        out.push_back(cur);
        return;
    }
    if (cur.count() + cand.count() < s) return;
    VertexSet rest = cand;
    for (std::uint32_t v = rest.first(); v != VertexSet::npos; v = rest.next(v)) {
        cur.set(v);
        VertexSet next(rest.universe());
        VertexSet common = rest & g.neighbors(v);
        for (std::uint32_t u = common.next(v); u != VertexSet::npos; u = common.next(u)) next.set(u);
        list_cliques_of_size(g, s, next, cur, out);
        cur.reset(v);
    }
}

}  // namespace

bool validate_triple(const Graph& g, const NonAdjacentTriple& t, std::size_t clique_size) {
    for (int i = 0; i < 3; ++i) {
        const VertexSet& a = t.parts[i];
        if (a.universe() != g.vertex_count() || a.empty()) return false;
        if (clique_size && a.count() != clique_size) return false;
        if (!g.is_clique(a) && clique_size) return false;
        if (t.parts[i].intersects(t.parts[(i + 1) % 3])) return false;
        if (!a.test(t.witnesses[i])) return false;
        if (!witness_ok(g, t.witnesses[i], t.parts[(i + 1) % 3])) return false;
    }
    return true;
}

std::optional<NonAdjacentTriple> find_non_adjacent_triple(const Graph& g, std::size_t clique_size,
                                                          std::size_t limit) {
    const std::size_t n = g.vertex_count();
    if (n > limit)
        throw std::invalid_argument("find_non_adjacent_triple: n=" + std::to_string(n) +
                                    " exceeds search limit " + std::to_string(limit));
    if (clique_size == 0) throw std::invalid_argument("find_non_adjacent_triple: size must be >= 1");

    std::vector<VertexSet> cliques;
    {
        VertexSet cur(n);
        list_cliques_of_size(g, clique_size, g.all_vertices(), cur, cliques);
    }
    std::vector<VertexSet> anti;
    for (std::uint32_t v = 0; v < n; ++v) anti.push_back(g.anti_neighborhood(v));

    for (const VertexSet& a1 : cliques) {
        for (std::uint32_t v1 = a1.first(); v1 != VertexSet::npos; v1 = a1.next(v1)) {
            for (const VertexSet& a2 : cliques) {
                if (a2.intersects(a1) || !a2.subset_of(anti[v1])) continue;
                for (std::uint32_t v2 = a2.first(); v2 != VertexSet::npos; v2 = a2.next(v2)) {
                    for (const VertexSet& a3 : cliques) {
                        if (a3.intersects(a1) || a3.intersects(a2) || !a3.subset_of(anti[v2]))
                            continue;
                        for (std::uint32_t v3 = a3.first(); v3 != VertexSet::npos;
                             v3 = a3.next(v3)) {
                            if (a1.subset_of(anti[v3]))
                                return NonAdjacentTriple{{a1, a2, a3}, {v1, v2, v3}};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

NonAdjacentTriple grow_triple(const IIMGraph& h, const NonAdjacentTriple& t, const LevelChoice& c) {
    if (!validate_triple(h.graph(), t))
        throw std::invalid_argument("grow_triple: triple invalid in the given graph");
    const std::size_t n = h.vertex_count();
    if (c.size() != n) throw std::invalid_argument("grow_triple: choice length mismatch");

    auto widened = [&](const VertexSet& s) { return s.resized(2 * n); };
    auto copy_id = [&](std::uint32_t v) { return static_cast<std::uint32_t>(n + v); };

    std::array<bool, 3> cloned{};
    int clone_count = 0;
    for (int i = 0; i < 3; ++i) {
        cloned[i] = c[t.witnesses[i]] == Choice::clone;
        clone_count += cloned[i];
    }

    NonAdjacentTriple out;
    for (int i = 0; i < 3; ++i) {
        out.parts[i] = widened(t.parts[i]);
        out.witnesses[i] = t.witnesses[i];
    }

    if (clone_count >= 2) {
        // grow every cloned part with its witness clone
        int grown = 0;
        for (int i = 0; i < 3 && grown < 2; ++i) {
            if (!cloned[i]) continue;
            out.parts[i].set(copy_id(t.witnesses[i]));
            ++grown;
        }
        return out;
    }
    if (clone_count == 1) {
        int i = cloned[0] ? 0 : (cloned[1] ? 1 : 2);
        out.parts[i].set(copy_id(t.witnesses[i]));
        out.parts[(i + 2) % 3].set(copy_id(t.witnesses[(i + 1) % 3]));
        return out;
    }
    // all three anticloned: every part grows and the cyclic order flips
    std::array<VertexSet, 3> b;
    for (int k = 0; k < 3; ++k) {
        b[k] = widened(t.parts[k]);
        b[k].set(copy_id(t.witnesses[(k + 2) % 3]));
    }
    out.parts = {b[0], b[2], b[1]};
    out.witnesses = {copy_id(t.witnesses[2]), copy_id(t.witnesses[1]), copy_id(t.witnesses[0])};
    return out;
}

namespace {

// set adjacency in the slow-growth sense: every vertex of x has a neighbor
// in y and vice versa
bool sets_adjacent(const Graph& g, const VertexSet& x, const VertexSet& y) {
    for (std::uint32_t v = x.first(); v != VertexSet::npos; v = x.next(v))
        if (!g.neighbors(v).intersects(y)) return false;
    for (std::uint32_t v = y.first(); v != VertexSet::npos; v = y.next(v))
        if (!g.neighbors(v).intersects(x)) return false;
    return true;
}

// ordered non-adjacency witnesses both ways, plus disjointness
bool tuple_compatible(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.intersects(y)) return false;
    bool fwd = false, bwd = false;
    for (std::uint32_t v = x.first(); v != VertexSet::npos && !fwd; v = x.next(v))
        fwd = witness_ok(g, v, y);
    for (std::uint32_t v = y.first(); v != VertexSet::npos && !bwd; v = y.next(v))
        bwd = witness_ok(g, v, x);
    return fwd && bwd;
}

}  // namespace

SlowGrowthResult construct_slow_clique_growth(int steps, int step_budget) {
    if (steps < 0 || steps > step_budget)
        throw std::invalid_argument("construct_slow_clique_growth: step count exceeds budget");
    SlowGrowthResult r{ChoiceSequence{}, IIMGraph::from_seed(Graph::complete(1)), {1}, -1};
    for (int lvl = 1; lvl <= steps; ++lvl) {
        const Graph& g = r.graph.graph();
        std::vector<VertexSet> cliques;
        try {
            cliques = maximum_cliques(g, 20000);
        } catch (const std::runtime_error&) {
            r.stalled_at = lvl;
            break;
        }

        // greedy maximal non-adjacent tuple, then close the first group under
        // set adjacency; only the anticloned group matters for the step
        std::vector<VertexSet> tuple;
        for (const VertexSet& c : cliques) {
            bool ok = true;
            for (const VertexSet& chosen : tuple)
                if (!tuple_compatible(g, c, chosen)) {
                    ok = false;
                    break;
                }
            if (ok) tuple.push_back(c);
        }

        VertexSet group(g.vertex_count());
        if (tuple.size() >= 2) {
            std::vector<VertexSet> b1{tuple[0]};
            for (const VertexSet& c : cliques) {
                if (c == tuple[0]) continue;
                bool adj_all = true;
                for (const VertexSet& m : b1)
                    if (!sets_adjacent(g, c, m)) {
                        adj_all = false;
                        break;
                    }
                if (adj_all) b1.push_back(c);
            }
            for (const VertexSet& m : b1) group |= m;
        } else {
            // no usable tuple: anticlone all maximum cliques if they are
            // pairwise adjacent, otherwise the schedule stalls
            bool all_adjacent = true;
            for (std::size_t i = 0; i < cliques.size() && all_adjacent; ++i)
                for (std::size_t j = i + 1; j < cliques.size(); ++j)
                    if (!sets_adjacent(g, cliques[i], cliques[j])) {
                        all_adjacent = false;
                        break;
                    }
            if (!all_adjacent) {
                r.stalled_at = lvl;
                break;
            }
            for (const VertexSet& m : cliques) group |= m;
        }

        LevelChoice choice(g.vertex_count(), Choice::clone);
        for (std::uint32_t v = group.first(); v != VertexSet::npos; v = group.next(v))
            choice[v] = Choice::anticlone;
        r.sequence.levels.push_back(choice);
        r.graph = iim_step(r.graph, choice);

        std::size_t omega = clique_number(r.graph.graph()).size;
        if (omega > r.omega_by_level.back() + 1)
            throw std::logic_error("slow growth: omega grew by more than one in a level");
        r.omega_by_level.push_back(omega);
    }
    return r;
}

}  // namespace iim
