#include "iim/induced.hpp"

#include <algorithm>
#include <stdexcept>

namespace iim {

namespace {

std::vector<std::pair<int, int>> missing_edges(const Graph& pattern) {
    std::vector<std::pair<int, int>> out;
    const int n = static_cast<int>(pattern.vertex_count());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!pattern.has_edge(a, b)) out.push_back({a, b});
    return out;
}

}  // namespace

std::string InducedEmbedding::to_string() const {
    std::string out;
    for (std::size_t a = 0; a < map.size(); ++a) {
        if (a) out += ' ';
        out += std::to_string(a) + ":" + std::to_string(map[a]);
    }
    return out;
}

bool validate_embedding(const Graph& host, const Graph& pattern, const InducedEmbedding& e) {
    const std::size_t n = pattern.vertex_count();
    if (e.map.size() != n) return false;
    for (std::size_t a = 0; a < n; ++a) {
        if (e.map[a] >= host.vertex_count()) return false;
        for (std::size_t b = a + 1; b < n; ++b) {
            if (e.map[a] == e.map[b]) return false;
            if (pattern.has_edge(a, b) != host.has_edge(e.map[a], e.map[b])) return false;
        }
    }
    return true;
}

namespace {

struct InducedSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<std::uint32_t> order;  // pattern vertices, most-connected-first
    std::vector<std::uint32_t> image;  // per pattern vertex
    VertexSet used;

    InducedSearch(const Graph& h, const Graph& p)
        : host(h), pattern(p), image(p.vertex_count(), VertexSet::npos), used(h.vertex_count()) {
        // greedy order: next vertex with most already-ordered neighbors
        const std::size_t n = p.vertex_count();
        std::vector<bool> placed(n, false);
        for (std::size_t step = 0; step < n; ++step) {
            std::uint32_t pick = VertexSet::npos;
            std::size_t best_links = 0;
            for (std::uint32_t v = 0; v < n; ++v) {
                if (placed[v]) continue;
                std::size_t links = 0;
                for (std::uint32_t u : order)
                    if (p.has_edge(v, u)) ++links;
                if (pick == VertexSet::npos || links > best_links ||
                    (links == best_links && p.degree(v) > p.degree(pick))) {
                    pick = v;
                    best_links = links;
                }
            }
            placed[pick] = true;
            order.push_back(pick);
        }
    }

    bool extend(std::size_t idx) {
        if (idx == order.size()) return true;
        std::uint32_t pv = order[idx];
        for (std::uint32_t hv = 0; hv < host.vertex_count(); ++hv) {
            if (used.test(hv)) continue;
            if (host.degree(hv) < pattern.degree(pv)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j) {
                std::uint32_t pu = order[j];
                ok = pattern.has_edge(pv, pu) == host.has_edge(hv, image[pu]);
            }
            if (!ok) continue;
            image[pv] = hv;
            used.set(hv);
            if (extend(idx + 1)) return true;
            used.reset(hv);
            image[pv] = VertexSet::npos;
        }
        return false;
    }
};

}  // namespace

std::optional<InducedEmbedding> contains_induced(const Graph& host, const Graph& pattern,
                                                 std::size_t pattern_limit) {
    if (pattern.vertex_count() > pattern_limit)
        throw std::invalid_argument("contains_induced: pattern larger than search limit " +
                                    std::to_string(pattern_limit));
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (pattern.vertex_count() == 0) return InducedEmbedding{};
    InducedSearch search(host, pattern);
    if (!search.extend(0)) return std::nullopt;
    return InducedEmbedding{std::move(search.image)};
}

namespace {

[[noreturn]] void ladder_fail(const std::string& what) {
    throw std::invalid_argument("lemma_ladder_extract: " + what);
}

}  // namespace

InducedEmbedding lemma_ladder_extract(const IIMGraph& h, const Graph& pattern,
                                      const LadderWitness& w) {
    const std::size_t n = pattern.vertex_count();
    const auto missing = missing_edges(pattern);

    std::vector<std::uint32_t> reps;
    std::vector<int> ladder;  // one level per missing edge

    if (w.base.empty()) {
        // plain form: anchored at level 0
        if (h.seed_size() != n) ladder_fail("level 0 size does not match the pattern");
        {
            VertexSet seed(h.vertex_count());
            for (std::uint32_t v = 0; v < n; ++v) seed.set(v);
            if (!h.graph().is_clique(seed)) ladder_fail("level 0 does not induce a complete graph");
        }
        if (w.levels.empty() || w.levels.front() != 0)
            ladder_fail("condition 1 violated: ladder must start at level 0");
        for (std::size_t i = 1; i < w.levels.size(); ++i)
            if (w.levels[i] <= w.levels[i - 1])
                ladder_fail("condition 1 violated: levels must ascend");
        if (w.levels.size() != 1 + missing.size())
            ladder_fail("ladder has " + std::to_string(w.levels.size()) + " levels, expected " +
                        std::to_string(1 + missing.size()));
        if (w.levels.back() > h.top_level()) ladder_fail("ladder level beyond the graph's top level");

        if (w.members.universe() != h.vertex_count()) ladder_fail("member set universe mismatch");
        for (std::uint32_t v = w.members.first(); v != VertexSet::npos; v = w.members.next(v)) {
            bool in_ladder_level =
                std::find(w.levels.begin(), w.levels.end(), h.level_of(v)) != w.levels.end();
            if (!in_ladder_level) ladder_fail("condition 2 violated: member outside ladder levels");
        }
        for (std::uint32_t v = 0; v < h.seed_size(); ++v)
            if (!w.members.test(v)) ladder_fail("condition 3 violated: level 0 not contained in U");

        // condition 4: every earlier member is cloned into each later ladder
        // level, and those clones are exactly U's slice there
        for (std::size_t i = 1; i < w.levels.size(); ++i) {
            int lvl = w.levels[i];
            VertexSet expected(h.vertex_count());
            for (std::uint32_t u = w.members.first(); u != VertexSet::npos;
                 u = w.members.next(u)) {
                if (h.level_of(u) >= lvl) continue;
                std::uint32_t cu = h.copy_at(u, lvl);
                if (h.kind_of(cu) != CopyKind::clone)
                    ladder_fail("condition 4a violated: member anticloned at level " +
                                std::to_string(lvl));
                expected.set(cu);
            }
            for (std::uint32_t v = h.level_begin(lvl); v < h.level_end(lvl); ++v)
                if (w.members.test(v) != expected.test(v))
                    ladder_fail("condition 4b violated: U slice at level " + std::to_string(lvl) +
                                " is not exactly the clones of earlier members");
        }

        for (std::uint32_t v = 0; v < n; ++v) reps.push_back(v);
        ladder.assign(w.levels.begin() + 1, w.levels.end());
    } else {
        // rooted form: explicit base clique, ladder levels above it
        if (w.base.size() != n) ladder_fail("base size does not match the pattern");
        if (w.levels.size() != missing.size())
            ladder_fail("rooted ladder has " + std::to_string(w.levels.size()) +
                        " levels, expected " + std::to_string(missing.size()));
        int base_top = 0;
        for (std::uint32_t v : w.base) base_top = std::max(base_top, h.level_of(v));
        int prev = base_top;
        for (int lvl : w.levels) {
            if (lvl <= prev) ladder_fail("rooted ladder levels must ascend above the base");
            if (lvl > h.top_level()) ladder_fail("ladder level beyond the graph's top level");
            prev = lvl;
        }
        VertexSet base_set(h.vertex_count());
        for (std::uint32_t v : w.base) {
            if (base_set.test(v)) ladder_fail("base vertices must be distinct");
            base_set.set(v);
        }
        if (!h.graph().is_clique(base_set)) ladder_fail("base does not induce a complete graph");
        reps = w.base;
        ladder = w.levels;
    }

    for (std::size_t e = 0; e < missing.size(); ++e) {
        auto [a, b] = missing[e];
        int lvl = ladder[e];
        std::uint32_t ca = h.copy_at(reps[a], lvl);
        std::uint32_t cb = h.copy_at(reps[b], lvl);
        if (h.kind_of(ca) != CopyKind::clone || h.kind_of(cb) != CopyKind::clone)
            ladder_fail("condition 4a violated: representative not cloned at level " +
                        std::to_string(lvl));
        reps[a] = ca;
        reps[b] = cb;
    }

    InducedEmbedding out{std::move(reps)};
    if (!validate_embedding(h.graph(), pattern, out))
        throw std::logic_error("lemma_ladder_extract: extraction produced an invalid embedding");
    return out;
}

namespace {

// Even-parity descendants of rep in the given level whose genealogy chain
// stays strictly above last_used (the proof's tail restriction).
std::vector<std::uint32_t> eligible_even_descendants(const IIMGraph& h, std::uint32_t rep,
                                                     int level, int last_used) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = h.level_begin(level); u < h.level_end(level); ++u) {
        std::uint32_t w = u;
        int parity = 0;
        bool ok = true;
        while (w != rep) {
            if (h.kind_of(w) == CopyKind::original || h.level_of(w) <= h.level_of(rep)) {
                ok = false;
                break;
            }
            if (w != u && h.level_of(w) <= last_used) {
                ok = false;  // intermediate ancestor at or before the last used level
                break;
            }
            if (h.kind_of(w) == CopyKind::anticlone) parity ^= 1;
            w = h.precopy_of(w);
        }
        if (ok && parity == 0) out.push_back(u);
    }
    return out;
}

}  // namespace

ParityOutcome find_induced_via_parity(const IIMGraph& h, const Graph& pattern) {
    const std::size_t n = pattern.vertex_count();
    if (h.seed_size() != n)
        throw std::invalid_argument("find_induced_via_parity: level 0 size must match the pattern");
    {
        VertexSet seed(h.vertex_count());
        for (std::uint32_t v = 0; v < n; ++v) seed.set(v);
        if (!h.graph().is_clique(seed))
            throw std::invalid_argument("find_induced_via_parity: level 0 must induce K_n");
    }

    const auto missing = missing_edges(pattern);
    const std::size_t ladder_threshold = n + missing.size();

    std::vector<std::uint32_t> reps(n);
    for (std::uint32_t v = 0; v < n; ++v) reps[v] = v;
    int last_used = 0;
    std::vector<std::pair<int, int>> removed;

    for (const auto& edge : missing) {
        auto [a, b] = edge;
        bool swapped = false;
        for (int t = last_used + 1; t <= h.top_level() && !swapped; ++t) {
            auto da = eligible_even_descendants(h, reps[a], t, last_used);
            if (da.empty()) continue;
            auto db = eligible_even_descendants(h, reps[b], t, last_used);
            if (db.empty()) continue;
            reps[a] = da.front();
            reps[b] = db.front();
            last_used = t;
            removed.push_back(edge);
            swapped = true;
        }
        if (swapped) continue;

        // blocked: collect the all-odd levels per side
        ProgressState state;
        state.removed = removed;
        state.reps = reps;
        state.blocked_edge = edge;
        state.last_used_level = last_used;
        for (int t = last_used + 1; t <= h.top_level(); ++t) {
            if (eligible_even_descendants(h, reps[a], t, last_used).empty())
                state.odd_levels_i.push_back(t);
            if (eligible_even_descendants(h, reps[b], t, last_used).empty())
                state.odd_levels_j.push_back(t);
        }

        const std::vector<int>* blocked = nullptr;
        std::uint32_t root_rep = 0;
        if (state.odd_levels_i.size() >= ladder_threshold) {
            blocked = &state.odd_levels_i;
            root_rep = reps[a];
        } else if (state.odd_levels_j.size() >= ladder_threshold) {
            blocked = &state.odd_levels_j;
            root_rep = reps[b];
        }
        if (!blocked) return state;

        // enough all-odd levels: rebuild from the anticlone at the first one
        // and clone it down a fresh K_n chain, then ladder the missing edges
        const std::vector<int>& ls = *blocked;
        LadderWitness w;
        std::uint32_t f = h.copy_at(root_rep, ls[0]);
        if (h.kind_of(f) != CopyKind::anticlone)
            throw std::logic_error("parity fallback: first blocked copy is not an anticlone");
        w.base.push_back(f);
        for (std::size_t j = 1; j < n; ++j) {
            f = h.copy_at(f, ls[j]);
            if (h.kind_of(f) != CopyKind::clone)
                throw std::logic_error("parity fallback: chain copy is not a clone");
            w.base.push_back(f);
        }
        w.levels.assign(ls.begin() + n, ls.begin() + n + missing.size());
        w.members = VertexSet(h.vertex_count());
        return lemma_ladder_extract(h, pattern, w);
    }

    InducedEmbedding out{std::move(reps)};
    if (!validate_embedding(h.graph(), pattern, out))
        throw std::logic_error("find_induced_via_parity: produced an invalid embedding");
    return out;
}

bool validate_blocking(const IIMGraph& h, const ProgressState& p) {
    auto [a, b] = p.blocked_edge;
    std::uint32_t ra = p.reps[a], rb = p.reps[b];
    for (int t : p.odd_levels_i)
        if (!eligible_even_descendants(h, ra, t, p.last_used_level).empty()) return false;
    for (int t : p.odd_levels_j)
        if (!eligible_even_descendants(h, rb, t, p.last_used_level).empty()) return false;
    // together the two lists must cover every level above last_used
    for (int t = p.last_used_level + 1; t <= h.top_level(); ++t) {
        bool in_i = std::find(p.odd_levels_i.begin(), p.odd_levels_i.end(), t) != p.odd_levels_i.end();
        bool in_j = std::find(p.odd_levels_j.begin(), p.odd_levels_j.end(), t) != p.odd_levels_j.end();
        if (!in_i && !in_j) return false;
    }
    return true;
}

}  // namespace iim
