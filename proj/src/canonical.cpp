#include "iim/canonical.hpp"

#include <algorithm>
#include <stdexcept>

namespace iim {
namespace {

// DFS over vertex orders whose degree sequence is non-increasing (an
// isomorphism-invariant subset of all orders), minimizing the upper-triangle
// adjacency bits in column-major reveal order. At each position only the
// candidates realizing the minimal bit pattern against the placed prefix can
// extend the minimum, and candidates indistinguishable outside the placed
// prefix are collapsed to one.
struct Minimizer {
    const Graph& g;
    std::size_t n;
    std::vector<std::size_t> target_deg;  // required degree per position
    std::vector<std::uint8_t> best, cur;  // n(n-1)/2 bits each
    std::vector<std::uint32_t> perm;
    std::vector<bool> used;
    bool have_best = false;

    explicit Minimizer(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        for (std::uint32_t v = 0; v < n; ++v) target_deg.push_back(g.degree(v));
        std::sort(target_deg.rbegin(), target_deg.rend());
        best.assign(n * (n - 1) / 2, 1);
        cur.assign(best.size(), 0);
        perm.assign(n, 0);
        used.assign(n, false);
    }

    void run() { dfs(0, 0, false); }

    std::vector<std::uint8_t> column_bits(std::uint32_t v, std::size_t pos) const {
        std::vector<std::uint8_t> bits(pos);
        for (std::size_t j = 0; j < pos; ++j) bits[j] = g.has_edge(perm[j], v) ? 1 : 0;
        return bits;
    }

    // true when u and v agree everywhere except on the pair itself
    bool interchangeable(std::uint32_t u, std::uint32_t v) const {
        VertexSet diff = g.neighbors(u);
        diff ^= g.neighbors(v);
        diff.reset(u);
        diff.reset(v);
        return diff.empty();
    }

    void dfs(std::size_t pos, std::size_t offset, bool maybe_smaller) {
        if (pos == n) {
            if (!have_best || std::lexicographical_compare(cur.begin(), cur.end(), best.begin(),
                                                           best.end()))
                best = cur;
            have_best = true;
            return;
        }
        std::vector<std::uint32_t> cands;
        std::vector<std::uint8_t> min_bits;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) != target_deg[pos]) continue;
            std::vector<std::uint8_t> bits = column_bits(v, pos);
            if (cands.empty() || bits < min_bits) {
                min_bits = std::move(bits);
                cands.assign(1, v);
            } else if (bits == min_bits) {
                cands.push_back(v);
            }
        }
        // candidates with identical environments lead to identical subtrees
        std::vector<std::uint32_t> keep;
        for (std::uint32_t v : cands) {
            bool duplicate = false;
            for (std::uint32_t u : keep)
                if (interchangeable(u, v)) {
                    duplicate = true;
                    break;
                }
            if (!duplicate) keep.push_back(v);
        }

        // compare this column against the incumbent unless an earlier column
        // already went strictly below it
        bool child_maybe_smaller = maybe_smaller;
        if (have_best && !maybe_smaller) {
            for (std::size_t j = 0; j < pos; ++j) {
                if (min_bits[j] > best[offset + j]) return;
                if (min_bits[j] < best[offset + j]) {
                    child_maybe_smaller = true;
                    break;
                }
            }
        }
        for (std::size_t j = 0; j < pos; ++j) cur[offset + j] = min_bits[j];
        for (std::uint32_t v : keep) {
            used[v] = true;
            perm[pos] = v;
            dfs(pos + 1, offset + pos, child_maybe_smaller);
            used[v] = false;
        }
    }
};

}  // namespace

std::string canonical_key(const Graph& g, std::size_t limit) {
    const std::size_t n = g.vertex_count();
    if (n > limit)
        throw std::invalid_argument("canonical_key: n=" + std::to_string(n) +
                                    " exceeds exact backend limit " + std::to_string(limit));
    std::string key;
    key.push_back(static_cast<char>(n));
    if (n == 0) return key;
    Minimizer m(g);
    m.run();
    std::uint8_t acc = 0;
    int fill = 0;
    for (std::uint8_t bit : m.best) {
        acc = static_cast<std::uint8_t>((acc << 1) | bit);
        if (++fill == 8) {
            key.push_back(static_cast<char>(acc));
            acc = 0;
            fill = 0;
        }
    }
    if (fill) key.push_back(static_cast<char>(acc << (8 - fill)));
    return key;
}

}  // namespace iim
