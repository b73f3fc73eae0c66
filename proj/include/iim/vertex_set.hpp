#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace iim {

// Fixed-universe bitmask over dense vertex ids 0..n-1.
class VertexSet {
public:
    static constexpr std::uint32_t npos = 0xffffffffu;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(std::size_t universe, const std::vector<std::uint32_t>& members) {
        VertexSet s(universe);
        for (auto v : members) s.set(v);
        return s;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~0ull;
        s.trim();
        return s;
    }

    std::size_t universe() const { return n_; }

    bool test(std::uint32_t v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void set(std::uint32_t v) { words_[v >> 6] |= 1ull << (v & 63); }
    void reset(std::uint32_t v) { words_[v >> 6] &= ~(1ull << (v & 63)); }

    std::size_t count() const;
    bool empty() const;

    bool operator==(const VertexSet&) const = default;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    VertexSet& operator^=(const VertexSet& o);
    VertexSet complement() const;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { a -= b; return a; }

    bool subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    std::uint32_t first() const;
    std::uint32_t next(std::uint32_t v) const;

    std::vector<std::uint32_t> members() const;
    std::string to_string() const;

    /// Same members in a universe of a different size (members >= new size drop).
    VertexSet resized(std::size_t new_universe) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim();

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace iim
