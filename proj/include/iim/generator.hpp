#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iim/graph.hpp"

namespace iim {

enum class CopyKind : std::uint8_t { original, clone, anticlone };

enum class Choice : std::uint8_t { clone = 0, anticlone = 1 };

/// One bit per currently existing vertex: clone or anticlone its copy.
using LevelChoice = std::vector<Choice>;

/// Per-level choices; entry i must have length n0 * 2^i.
struct ChoiceSequence {
    std::vector<LevelChoice> levels;

    std::size_t step_count() const { return levels.size(); }

    /// "L1=0x0;L2=0x3;..." — within a level, vertex id v is bit v (LSB first),
    /// bit 1 = anticlone.
    std::string to_string() const;
    static ChoiceSequence parse(const std::string& text);
};

/// Graph grown by the iterated independent model, with per-vertex genealogy.
/// Levels occupy contiguous id ranges: level 0 is the seed, level i >= 1 is
/// [n0*2^(i-1), n0*2^i), and the copy of vertex v made at level i has id
/// level_begin(i) + v.
class IIMGraph {
public:
    static IIMGraph from_seed(Graph seed);

    const Graph& graph() const { return graph_; }
    std::uint32_t seed_size() const { return seed_size_; }
    int top_level() const { return top_level_; }
    std::size_t vertex_count() const { return graph_.vertex_count(); }

    int level_of(std::uint32_t v) const { return origin_[v].level; }
    CopyKind kind_of(std::uint32_t v) const { return origin_[v].kind; }
    std::uint32_t precopy_of(std::uint32_t v) const { return origin_[v].precopy; }

    std::uint32_t level_begin(int level) const;
    std::uint32_t level_end(int level) const;
    VertexSet level_set(int level) const;

    /// Id of the copy of v created at the step that appended `level`.
    std::uint32_t copy_at(std::uint32_t v, int level) const;

    /// Induced prefix H_i on levels 0..i (ids coincide, so this is the
    /// leading block of the adjacency).
    Graph prefix_graph(int level) const;

    std::string to_json() const;

private:
    friend IIMGraph iim_step(const IIMGraph&, const LevelChoice&);

    struct Origin {
        CopyKind kind;
        std::uint32_t precopy;  // VertexSet::npos for originals
        int level;
    };

    Graph graph_;
    std::vector<Origin> origin_;
    std::uint32_t seed_size_ = 0;
    int top_level_ = 0;
};

/// One model step: appends a level with one copy per existing vertex. The
/// copy of v is adjacent to N[v] (clone) or V\N[v] (anticlone), both taken
/// in the pre-step graph.
IIMGraph iim_step(const IIMGraph& h, const LevelChoice& c);

IIMGraph iim_generate(const Graph& seed, const ChoiceSequence& seq);

inline constexpr int kDefaultBitBudget = 20;

/// All choice sequences for (n0, steps) in lexicographic bit order; the flat
/// bit string lists level 1 first, vertex ids ascending within a level.
class SequenceSpace {
public:
    SequenceSpace(std::uint32_t n0, int steps, int bit_budget = kDefaultBitBudget);

    int total_bits() const { return total_bits_; }
    std::uint64_t count() const { return 1ull << total_bits_; }
    ChoiceSequence at(std::uint64_t index) const;

private:
    std::uint32_t n0_;
    int steps_;
    int total_bits_;
};

/// Lazy exhaustive enumeration of IIM_l(seed), optionally over an index
/// subrange for worker partitioning.
class IimEnumerator {
public:
    IimEnumerator(Graph seed, int steps, int bit_budget = kDefaultBitBudget);
    IimEnumerator(Graph seed, int steps, std::uint64_t begin, std::uint64_t end,
                  int bit_budget = kDefaultBitBudget);

    std::uint64_t total() const { return space_.count(); }
    std::uint64_t cursor() const { return cursor_; }

    bool next(ChoiceSequence* seq, IIMGraph* out);

private:
    Graph seed_;
    SequenceSpace space_;
    std::uint64_t cursor_, end_;
};

struct SampleResult {
    ChoiceSequence sequence;
    IIMGraph graph;
};

/// Random member of IIM_l(seed): each copy independently a clone with
/// probability p. Bit-stable across runs and platforms for a fixed seed
/// (mt19937_64 with a fixed uniform-double construction).
SampleResult sample_iim(const Graph& seed, int steps, double clone_probability,
                        std::uint64_t rng_seed);

/// S_c(v): v plus its direct clones across all levels; induces a clique.
VertexSet clone_set(const IIMGraph& h, std::uint32_t v);
/// S_a(v): the direct anticlones of v; induces a clique.
VertexSet anticlone_set(const IIMGraph& h, std::uint32_t v);

/// Number of anticlone links on the genealogy path from v down to ancestor,
/// mod 2; nullopt when ancestor is not on v's chain.
std::optional<int> anticlone_parity(const IIMGraph& h, std::uint32_t v, std::uint32_t ancestor);

struct FirstAnticloneCount {
    int level;            // first level containing any anticlone
    std::uint32_t count;  // level-0 vertices whose copy at that level is an anticlone
};

/// a_l(H); throws when h contains no anticlone.
FirstAnticloneCount a_l_count(const IIMGraph& h);

}  // namespace iim
