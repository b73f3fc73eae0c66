#include "iim/generator.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace iim {

namespace {

std::string level_hex(const LevelChoice& c) {
    // vertex 0 is the least significant bit
    std::string hex;
    for (std::size_t nib = 0; nib * 4 < c.size(); ++nib) {
        int val = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            std::size_t v = nib * 4 + b;
            if (v < c.size() && c[v] == Choice::anticlone) val |= 1 << b;
        }
        hex.push_back("0123456789abcdef"[val]);
    }
    std::reverse(hex.begin(), hex.end());
    return hex.empty() ? "0" : hex;
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string ChoiceSequence::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i) os << ';';
        os << 'L' << (i + 1) << "=0x" << level_hex(levels[i]);
    }
    return os.str();
}

ChoiceSequence ChoiceSequence::parse(const std::string& text) {
    ChoiceSequence seq;
    if (text.empty()) return seq;
    std::istringstream is(text);
    std::string item;
    std::size_t expect = 1;
    while (std::getline(is, item, ';')) {
        std::size_t eq = item.find('=');
        if (item.empty() || item[0] != 'L' || eq == std::string::npos)
            throw std::runtime_error("choice parse error: expected \"L<i>=0x<hex>\", got \"" + item + "\"");
        std::size_t idx = std::stoul(item.substr(1, eq - 1));
        if (idx != expect)
            throw std::runtime_error("choice parse error: levels must appear as L1;L2;... (saw L" +
                                     std::to_string(idx) + ")");
        std::string hex = item.substr(eq + 1);
        if (hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0) hex = hex.substr(2);
        if (hex.empty()) throw std::runtime_error("choice parse error: empty hex in \"" + item + "\"");
        LevelChoice c;
        for (auto it = hex.rbegin(); it != hex.rend(); ++it) {
            int val = hex_digit(*it);
            if (val < 0) throw std::runtime_error("choice parse error: bad hex digit in \"" + item + "\"");
            for (int b = 0; b < 4; ++b)
                c.push_back((val >> b) & 1 ? Choice::anticlone : Choice::clone);
        }
        seq.levels.push_back(std::move(c));
        ++expect;
    }
    return seq;
}

IIMGraph IIMGraph::from_seed(Graph seed) {
    IIMGraph h;
    h.seed_size_ = static_cast<std::uint32_t>(seed.vertex_count());
    h.origin_.assign(seed.vertex_count(), {CopyKind::original, VertexSet::npos, 0});
    h.graph_ = std::move(seed);
    h.top_level_ = 0;
    return h;
}

std::uint32_t IIMGraph::level_begin(int level) const {
    if (level < 0 || level > top_level_) throw std::invalid_argument("level out of range");
    return level == 0 ? 0 : seed_size_ << (level - 1);
}

std::uint32_t IIMGraph::level_end(int level) const {
    if (level < 0 || level > top_level_) throw std::invalid_argument("level out of range");
    return seed_size_ << level;
}

VertexSet IIMGraph::level_set(int level) const {
    VertexSet s(vertex_count());
    for (std::uint32_t v = level_begin(level); v < level_end(level); ++v) s.set(v);
    return s;
}

std::uint32_t IIMGraph::copy_at(std::uint32_t v, int level) const {
    std::uint32_t base = level_begin(level);
    if (v >= base) throw std::invalid_argument("vertex did not exist before the requested level");
    return base + v;
}

Graph IIMGraph::prefix_graph(int level) const {
    VertexSet keep(vertex_count());
    for (std::uint32_t v = 0; v < level_end(level); ++v) keep.set(v);
    return graph_.induced_subgraph(keep).graph;
}

std::string IIMGraph::to_json() const {
    nlohmann::json j;
    j["n0"] = seed_size_;
    std::vector<int> levels;
    nlohmann::json genealogy = nlohmann::json::array();
    for (std::uint32_t v = 0; v < vertex_count(); ++v) {
        levels.push_back(origin_[v].level);
        nlohmann::json entry;
        switch (origin_[v].kind) {
            case CopyKind::original: entry["kind"] = "original"; break;
            case CopyKind::clone: entry["kind"] = "clone"; break;
            case CopyKind::anticlone: entry["kind"] = "anticlone"; break;
        }
        if (origin_[v].precopy == VertexSet::npos)
            entry["precopy"] = nullptr;
        else
            entry["precopy"] = origin_[v].precopy;
        genealogy.push_back(entry);
    }
    j["levels"] = levels;
    j["genealogy"] = genealogy;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : graph_.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j.dump(2);
}

IIMGraph iim_step(const IIMGraph& h, const LevelChoice& c) {
    const std::size_t n = h.vertex_count();
    if (c.size() != n)
        throw std::invalid_argument("level choice length " + std::to_string(c.size()) +
                                    " does not match vertex count " + std::to_string(n));
    const std::size_t n2 = 2 * n;
    std::vector<VertexSet> adj(n2, VertexSet(n2));

    for (std::uint32_t v = 0; v < n; ++v) adj[v] = h.graph_.neighbors(v).resized(n2);

    for (std::uint32_t v = 0; v < n; ++v) {
        std::uint32_t copy = static_cast<std::uint32_t>(n + v);
        // neighborhood against the pre-step graph
        VertexSet base = c[v] == Choice::clone ? h.graph_.closed_neighborhood(v)
                                               : h.graph_.anti_neighborhood(v);
        adj[copy] = base.resized(n2);
        for (std::uint32_t u = base.first(); u != VertexSet::npos; u = base.next(u))
            adj[u].set(copy);
    }

    IIMGraph out;
    out.graph_ = Graph(std::move(adj));
    out.seed_size_ = h.seed_size_;
    out.top_level_ = h.top_level_ + 1;
    out.origin_ = h.origin_;
    out.origin_.reserve(n2);
    for (std::uint32_t v = 0; v < n; ++v) {
        CopyKind k = c[v] == Choice::clone ? CopyKind::clone : CopyKind::anticlone;
        out.origin_.push_back({k, v, out.top_level_});
    }
    return out;
}

IIMGraph iim_generate(const Graph& seed, const ChoiceSequence& seq) {
    IIMGraph h = IIMGraph::from_seed(seed);
    for (const auto& level : seq.levels) {
        // hex-parsed levels arrive nibble-padded; trailing clone bits shrink
        // to the exact width, anything else is a real mismatch
        if (level.size() > h.vertex_count()) {
            LevelChoice trimmed = level;
            while (trimmed.size() > h.vertex_count() && trimmed.back() == Choice::clone)
                trimmed.pop_back();
            h = iim_step(h, trimmed);
        } else {
            h = iim_step(h, level);
        }
    }
    return h;
}

SequenceSpace::SequenceSpace(std::uint32_t n0, int steps, int bit_budget)
    : n0_(n0), steps_(steps) {
    if (n0 == 0) throw std::invalid_argument("seed graph must have at least one vertex");
    if (steps < 0) throw std::invalid_argument("negative step count");
    long long bits = static_cast<long long>(n0) * ((1ll << steps) - 1);
    if (bits > bit_budget)
        throw std::runtime_error("enumeration budget exceeded: " + std::to_string(bits) +
                                 " choice bits > budget " + std::to_string(bit_budget));
    total_bits_ = static_cast<int>(bits);
}

ChoiceSequence SequenceSpace::at(std::uint64_t index) const {
    if (index >= count()) throw std::out_of_range("sequence index out of range");
    ChoiceSequence seq;
    int pos = 0;  // flat position; bit 0 of the string is the most significant of index
    for (int lvl = 0; lvl < steps_; ++lvl) {
        std::size_t width = static_cast<std::size_t>(n0_) << lvl;
        LevelChoice c(width, Choice::clone);
        for (std::size_t v = 0; v < width; ++v, ++pos)
            if ((index >> (total_bits_ - 1 - pos)) & 1) c[v] = Choice::anticlone;
        seq.levels.push_back(std::move(c));
    }
    return seq;
}

IimEnumerator::IimEnumerator(Graph seed, int steps, int bit_budget)
    : seed_(std::move(seed)),
      space_(static_cast<std::uint32_t>(seed_.vertex_count()), steps, bit_budget),
      cursor_(0),
      end_(space_.count()) {}

IimEnumerator::IimEnumerator(Graph seed, int steps, std::uint64_t begin, std::uint64_t end,
                             int bit_budget)
    : seed_(std::move(seed)),
      space_(static_cast<std::uint32_t>(seed_.vertex_count()), steps, bit_budget),
      cursor_(begin),
      end_(end) {
    if (end_ > space_.count() || begin > end_) throw std::out_of_range("bad enumerator range");
}

bool IimEnumerator::next(ChoiceSequence* seq, IIMGraph* out) {
    if (cursor_ >= end_) return false;
    ChoiceSequence s = space_.at(cursor_++);
    if (out) *out = iim_generate(seed_, s);
    if (seq) *seq = std::move(s);
    return true;
}

SampleResult sample_iim(const Graph& seed, int steps, double clone_probability,
                        std::uint64_t rng_seed) {
    if (clone_probability < 0.0 || clone_probability > 1.0)
        throw std::invalid_argument("clone probability must lie in [0,1]");
    std::mt19937_64 rng(rng_seed);
    ChoiceSequence seq;
    std::size_t width = seed.vertex_count();
    for (int lvl = 0; lvl < steps; ++lvl) {
        LevelChoice c(width);
        for (std::size_t v = 0; v < width; ++v) {
            // fixed 53-bit uniform construction; std::bernoulli_distribution is
            // not stream-stable across implementations
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            c[v] = u < clone_probability ? Choice::clone : Choice::anticlone;
        }
        seq.levels.push_back(std::move(c));
        width *= 2;
    }
    IIMGraph h = iim_generate(seed, seq);
    return {std::move(seq), std::move(h)};
}

VertexSet clone_set(const IIMGraph& h, std::uint32_t v) {
    VertexSet s(h.vertex_count());
    s.set(v);
    for (std::uint32_t u = 0; u < h.vertex_count(); ++u)
        if (h.kind_of(u) == CopyKind::clone && h.precopy_of(u) == v) s.set(u);
    return s;
}

VertexSet anticlone_set(const IIMGraph& h, std::uint32_t v) {
    VertexSet s(h.vertex_count());
    for (std::uint32_t u = 0; u < h.vertex_count(); ++u)
        if (h.kind_of(u) == CopyKind::anticlone && h.precopy_of(u) == v) s.set(u);
    return s;
}

std::optional<int> anticlone_parity(const IIMGraph& h, std::uint32_t v, std::uint32_t ancestor) {
    int parity = 0;
    std::uint32_t w = v;
    while (w != ancestor) {
        if (h.kind_of(w) == CopyKind::original) return std::nullopt;
        if (h.level_of(w) <= h.level_of(ancestor)) return std::nullopt;
        if (h.kind_of(w) == CopyKind::anticlone) parity ^= 1;
        w = h.precopy_of(w);
    }
    return parity;
}

FirstAnticloneCount a_l_count(const IIMGraph& h) {
    for (int lvl = 1; lvl <= h.top_level(); ++lvl) {
        bool any = false;
        std::uint32_t count = 0;
        for (std::uint32_t v = h.level_begin(lvl); v < h.level_end(lvl); ++v) {
            if (h.kind_of(v) != CopyKind::anticlone) continue;
            any = true;
            if (h.precopy_of(v) < h.seed_size()) ++count;
        }
        if (any) return {lvl, count};
    }
    throw std::runtime_error("a_l_count: graph contains no anticlone");
}

}  // namespace iim
