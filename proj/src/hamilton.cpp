#include "iim/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace iim {

bool validate_cycle(const Graph& g, const std::vector<std::uint32_t>& cycle) {
    const std::size_t n = g.vertex_count();
    if (n < 3 || cycle.size() != n) return false;
    VertexSet seen(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t v = cycle[i];
        if (v >= n || seen.test(v)) return false;
        seen.set(v);
        if (!g.has_edge(v, cycle[(i + 1) % n])) return false;
    }
    return true;
}

namespace {

// backtracking over <=64 vertices with word-mask state: reachability and
// forced-degree pruning plus fewest-continuations-first ordering
struct PathSearch {
    std::vector<std::uint64_t> adj;
    std::size_t n;
    std::uint32_t target;
    bool cycle_mode;  // target is the fixed start; close the loop at the end
    std::vector<std::uint32_t> path;
    std::uint64_t visited = 0, full;

    PathSearch(const Graph& g, std::uint32_t start, std::uint32_t goal, bool cycle)
        : n(g.vertex_count()), target(goal), cycle_mode(cycle) {
        adj.assign(n, 0);
        for (std::uint32_t v = 0; v < n; ++v)
            for (auto u : g.neighbors(v).members()) adj[v] |= 1ull << u;
        full = n == 64 ? ~0ull : (1ull << n) - 1;
        path.push_back(start);
        visited = 1ull << start;
    }

    bool feasible(std::uint32_t cur) const {
        std::uint64_t open = full & ~visited;
        if (!open) return true;
        std::uint64_t reach = adj[cur] & open;
        while (true) {
            std::uint64_t grown = reach;
            for (std::uint64_t m = reach; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                grown |= adj[v] & open;
            }
            if (grown == reach) break;
            reach = grown;
        }
        if (open & ~reach) return false;
        std::uint64_t usable = open | (1ull << cur) | (1ull << target);
        for (std::uint64_t m = open; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            int avail = std::popcount(adj[u] & usable);
            int need = (!cycle_mode && static_cast<std::uint32_t>(u) == target) ? 1 : 2;
            if (avail < need) return false;
        }
        return true;
    }

    bool run() {
        std::uint32_t cur = path.back();
        if (path.size() == n) {
            if (cycle_mode) return (adj[cur] >> target) & 1;
            return cur == target;
        }
        if (!feasible(cur)) return false;
        std::uint64_t cand = adj[cur] & ~visited;
        if (!cycle_mode && path.size() + 1 != n) cand &= ~(1ull << target);  // goal goes last
        std::uint32_t order[64];
        int count = 0;
        for (std::uint64_t m = cand; m;) {
            order[count++] = std::countr_zero(m);
            m &= m - 1;
        }
        std::uint64_t open = full & ~visited;
        std::stable_sort(order, order + count, [&](std::uint32_t a, std::uint32_t b) {
            return std::popcount(adj[a] & open) < std::popcount(adj[b] & open);
        });
        for (int i = 0; i < count; ++i) {
            std::uint32_t v = order[i];
            path.push_back(v);
            visited |= 1ull << v;
            if (run()) return true;
            visited &= ~(1ull << v);
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::uint32_t>> hamiltonian_cycle(const Graph& g, std::size_t limit) {
    const std::size_t n = g.vertex_count();
    if (n > limit)
        throw std::invalid_argument("hamiltonian_cycle: n=" + std::to_string(n) +
                                    " exceeds solver limit " + std::to_string(limit));
    if (n < 3 || !g.is_connected()) return std::nullopt;
    PathSearch search(g, 0, 0, true);
    if (!search.run()) return std::nullopt;
    return search.path;
}

std::optional<std::vector<std::uint32_t>> hamiltonian_path(const Graph& g, std::uint32_t from,
                                                           std::uint32_t to) {
    const std::size_t n = g.vertex_count();
    if (from >= n || to >= n || from == to) throw std::invalid_argument("hamiltonian_path: bad endpoints");
    if (n == 2) return g.has_edge(from, to) ? std::optional<std::vector<std::uint32_t>>({from, to})
                                            : std::nullopt;
    PathSearch search(g, from, to, false);
    if (!search.run()) return std::nullopt;
    return search.path;
}

namespace {

struct PartitionContext {
    const IIMGraph& h;
    const Graph& full;           // h.graph()
    Graph prev;                  // H_{l-1}
    std::vector<std::uint32_t> cloned, anticloned;
    int top;

    explicit PartitionContext(const IIMGraph& hh) : h(hh), full(hh.graph()), top(hh.top_level()) {
        prev = h.prefix_graph(top - 1);
        for (std::uint32_t v = 0; v < prev.vertex_count(); ++v) {
            if (h.kind_of(h.copy_at(v, top)) == CopyKind::clone)
                cloned.push_back(v);
            else
                anticloned.push_back(v);
        }
    }

    std::map<std::vector<std::uint64_t>, bool> ham_cache;

    bool part_has_ham_cycle(const VertexSet& part) {
        auto it = ham_cache.find(part.words());
        if (it != ham_cache.end()) return it->second;
        auto sub = prev.induced_subgraph(part);
        bool ok = sub.graph.vertex_count() >= 3 && hamiltonian_cycle(sub.graph).has_value();
        ham_cache.emplace(part.words(), ok);
        return ok;
    }

    std::optional<std::vector<std::uint32_t>> part_ham_path(const VertexSet& part, std::uint32_t v,
                                                            std::uint32_t w) {
        auto sub = prev.induced_subgraph(part);
        std::uint32_t lv = VertexSet::npos, lw = VertexSet::npos;
        for (std::uint32_t i = 0; i < sub.vertex_map.size(); ++i) {
            if (sub.vertex_map[i] == v) lv = i;
            if (sub.vertex_map[i] == w) lw = i;
        }
        auto local = hamiltonian_path(sub.graph, lv, lw);
        if (!local) return std::nullopt;
        std::vector<std::uint32_t> out;
        for (std::uint32_t i : *local) out.push_back(sub.vertex_map[i]);
        return out;
    }
};

// enumerate partitions of items into exactly k parts via restricted growth,
// keeping each part compliant with `can_join` as it grows
template <typename CanJoin, typename Done>
bool enumerate_partitions(const std::vector<std::uint32_t>& items, std::size_t k, CanJoin can_join,
                          Done done, std::vector<VertexSet>& parts, std::size_t idx,
                          std::size_t used) {
    if (idx == items.size()) {
        if (used != k) return false;
        for (const auto& p : parts)
            if (p.count() < 3) return false;
        return done(parts);
    }
    // not enough items left to give every part three members
    std::size_t deficit = 0;
    for (std::size_t j = 0; j < used; ++j) {
        std::size_t c = parts[j].count();
        if (c < 3) deficit += 3 - c;
    }
    deficit += 3 * (k - used);
    if (deficit > items.size() - idx) return false;
    std::uint32_t item = items[idx];
    std::size_t cap = std::min(used + 1, k);
    for (std::size_t j = 0; j < cap; ++j) {
        if (j < used && !can_join(parts[j], item)) continue;
        parts[j].set(item);
        std::size_t nused = std::max(used, j + 1);
        if (enumerate_partitions(items, k, can_join, done, parts, idx + 1, nused)) return true;
        parts[j].reset(item);
    }
    return false;
}

}  // namespace

bool validate_partition(const IIMGraph& h, const HamPartition& p) {
    if (h.top_level() < 1) return false;
    PartitionContext ctx(h);
    const std::size_t k = p.c_parts.size();
    if (k == 0 || p.a_parts.size() != k || p.connectors.size() != k) return false;

    VertexSet c_all(ctx.prev.vertex_count()), a_all(ctx.prev.vertex_count());
    for (const auto& part : p.c_parts) {
        if (part.universe() != ctx.prev.vertex_count() || part.intersects(c_all)) return false;
        c_all |= part;
        if (!ctx.part_has_ham_cycle(part)) return false;
    }
    for (const auto& part : p.a_parts) {
        if (part.universe() != ctx.prev.vertex_count() || part.intersects(a_all)) return false;
        a_all |= part;
        if (part.count() < 3 || !ctx.prev.is_independent(part)) return false;
    }
    if (c_all != VertexSet::of(ctx.prev.vertex_count(), ctx.cloned)) return false;
    if (a_all != VertexSet::of(ctx.prev.vertex_count(), ctx.anticloned)) return false;

    for (std::size_t i = 0; i < k; ++i) {
        const auto& con = p.connectors[i];
        const VertexSet& prev_a = p.a_parts[(i + k - 1) % k];
        if (con.v == con.w) return false;
        if (!p.c_parts[i].test(con.v) || !p.c_parts[i].test(con.w)) return false;
        if (!prev_a.test(con.u) || !p.a_parts[i].test(con.x)) return false;
        if (ctx.prev.has_edge(con.v, con.u)) return false;
        if (!ctx.prev.has_edge(con.w, con.x)) return false;
        if (!ctx.part_ham_path(p.c_parts[i], con.v, con.w)) return false;
    }
    return true;
}

std::optional<HamPartition> find_ham_partition(const IIMGraph& h, std::size_t limit) {
    if (h.top_level() < 1)
        throw std::invalid_argument("find_ham_partition: graph has no copy level");
    PartitionContext ctx(h);
    if (ctx.prev.vertex_count() > limit)
        throw std::invalid_argument("find_ham_partition: |V(H_{l-1})|=" +
                                    std::to_string(ctx.prev.vertex_count()) +
                                    " exceeds search limit " + std::to_string(limit));

    const std::size_t max_k = std::min(ctx.cloned.size(), ctx.anticloned.size()) / 3;
    for (std::size_t k = 1; k <= max_k; ++k) {
        std::vector<VertexSet> c_parts(k, VertexSet(ctx.prev.vertex_count()));
        std::vector<VertexSet> a_parts(k, VertexSet(ctx.prev.vertex_count()));
        std::optional<HamPartition> found;

        auto try_connectors = [&](const std::vector<VertexSet>& cs,
                                  const std::vector<VertexSet>& as) -> bool {
            // candidate connectors per segment, then pick one per segment with
            // the cross-segment exit/entry constraint
            std::vector<std::vector<HamPartition::Connector>> cands(k);
            for (std::size_t i = 0; i < k; ++i) {
                const VertexSet& ca = as[(i + k - 1) % k];
                for (std::uint32_t v = cs[i].first(); v != VertexSet::npos; v = cs[i].next(v)) {
                    VertexSet us = ca - ctx.prev.neighbors(v);
                    if (us.empty()) continue;
                    for (std::uint32_t w = cs[i].first(); w != VertexSet::npos; w = cs[i].next(w)) {
                        if (v == w) continue;
                        VertexSet xs = as[i] & ctx.prev.neighbors(w);
                        if (xs.empty()) continue;
                        if (!ctx.part_ham_path(cs[i], v, w)) continue;
                        for (std::uint32_t u = us.first(); u != VertexSet::npos; u = us.next(u))
                            for (std::uint32_t x = xs.first(); x != VertexSet::npos; x = xs.next(x))
                                cands[i].push_back({v, w, u, x});
                    }
                }
                if (cands[i].empty()) return false;
            }
            std::vector<HamPartition::Connector> chosen(k);
            auto assign = [&](auto&& self, std::size_t i) -> bool {
                if (i == k) {
                    // exit of segment i lives in a_parts[i]; entry-anticlone of
                    // segment i+1 draws from the same part
                    for (std::size_t j = 0; j < k; ++j) {
                        std::uint32_t exit_x = chosen[j].x;
                        std::uint32_t entry_u = chosen[(j + 1) % k].u;
                        if (exit_x == entry_u && as[j].count() < 4) return false;
                    }
                    return true;
                }
                for (const auto& c : cands[i]) {
                    chosen[i] = c;
                    if (self(self, i + 1)) return true;
                }
                return false;
            };
            if (!assign(assign, 0)) return false;
            found = HamPartition{cs, as, chosen};
            return true;
        };

        auto on_a_done = [&](const std::vector<VertexSet>& as) -> bool {
            auto on_c_done = [&](const std::vector<VertexSet>& cs) -> bool {
                for (const auto& part : cs)
                    if (!ctx.part_has_ham_cycle(part)) return false;
                // alignments: rotate/permute the A parts against the C parts
                std::vector<std::size_t> perm(k);
                for (std::size_t i = 0; i < k; ++i) perm[i] = i;
                do {
                    std::vector<VertexSet> as_arr(k, VertexSet(ctx.prev.vertex_count()));
                    for (std::size_t i = 0; i < k; ++i) as_arr[i] = as[perm[i]];
                    if (try_connectors(cs, as_arr)) return true;
                } while (std::next_permutation(perm.begin(), perm.end()));
                return false;
            };
            return enumerate_partitions(
                ctx.cloned, k, [&](const VertexSet&, std::uint32_t) { return true; }, on_c_done,
                c_parts, 0, 0);
        };

        bool ok = enumerate_partitions(
            ctx.anticloned, k,
            [&](const VertexSet& part, std::uint32_t v) {
                return !ctx.prev.neighbors(v).intersects(part);
            },
            on_a_done, a_parts, 0, 0);
        if (ok && found) return found;
    }
    return std::nullopt;
}

namespace {

// Hamiltonian path through an independent part and its anticlones, entering
// at original `entry` and leaving at the anticlone of `exit_v`. In the crown
// graph a vertex is adjacent to every anticlone except its own.
std::vector<std::uint32_t> crown_path(const std::vector<std::uint32_t>& members,
                                      std::uint32_t entry, std::uint32_t exit_v,
                                      const IIMGraph& h, int top) {
    const std::size_t m = members.size();
    std::vector<std::uint32_t> labels;  // labels[0] = entry
    labels.push_back(entry);
    for (std::uint32_t v : members)
        if (v != entry && v != exit_v) labels.push_back(v);
    auto anticlone = [&](std::uint32_t v) { return h.copy_at(v, top); };

    std::vector<std::uint32_t> path;
    if (entry != exit_v) {
        labels.push_back(exit_v);  // labels[m-1] = exit
        // o_x, a_1, o_3, a_2, ..., o_m(=exit slot shifted), ... walk the crown
        // cycle (o_1,a_m,o_2,a_1,o_3,a_2,...,o_m,a_{m-1}) cut at (a_m, o_2),
        // with x at slot 2 and exit at slot m. 1-based slots below.
        std::vector<std::uint32_t> slot(m + 1);
        slot[2] = entry;
        slot[m] = exit_v;
        std::size_t fill = 1;
        for (std::uint32_t v : members) {
            if (v == entry || v == exit_v) continue;
            while (fill == 2 || fill == m) ++fill;
            slot[fill++] = v;
        }
        for (std::size_t i = 2; i <= m; ++i) {
            path.push_back(slot[i]);
            path.push_back(anticlone(slot[i - 1]));
        }
        path.push_back(slot[1]);
        path.push_back(anticlone(slot[m]));
    } else {
        if (m < 4)
            throw std::invalid_argument("crown_path: equal entry and exit need at least 4 members");
        // o_1, a_3, o_2, a_4, ..., o_{m-2}, a_m, o_{m-1}, a_2, o_m, a_1
        std::vector<std::uint32_t> slot(m + 1);
        slot[1] = entry;
        std::size_t fill = 2;
        for (std::uint32_t v : members)
            if (v != entry) slot[fill++] = v;
        for (std::size_t i = 1; i + 2 <= m; ++i) {
            path.push_back(slot[i]);
            path.push_back(anticlone(slot[i + 2]));
        }
        path.push_back(slot[m - 1]);
        path.push_back(anticlone(slot[2]));
        path.push_back(slot[m]);
        path.push_back(anticlone(slot[1]));
    }
    return path;
}

}  // namespace

std::vector<std::uint32_t> build_cycle_from_partition(const IIMGraph& h, const HamPartition& p) {
    if (!validate_partition(h, p))
        throw std::invalid_argument("build_cycle_from_partition: invalid partition");
    PartitionContext ctx(h);
    const std::size_t k = p.c_parts.size();
    const int top = h.top_level();

    std::vector<std::uint32_t> cycle;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& con = p.connectors[i];
        auto cpath = ctx.part_ham_path(p.c_parts[i], con.v, con.w);
        if (!cpath)
            throw std::logic_error("build_cycle_from_partition: connector path disappeared");
        for (std::uint32_t v : *cpath) {
            cycle.push_back(v);
            cycle.push_back(h.copy_at(v, top));
        }
        std::uint32_t next_u = p.connectors[(i + 1) % k].u;
        std::vector<std::uint32_t> apath =
            crown_path(p.a_parts[i].members(), con.x, next_u, h, top);
        cycle.insert(cycle.end(), apath.begin(), apath.end());
    }
    if (!validate_cycle(h.graph(), cycle))
        throw std::logic_error("build_cycle_from_partition: constructed cycle failed validation");
    return cycle;
}

}  // namespace iim
