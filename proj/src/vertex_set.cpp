#include "iim/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace iim {

std::size_t VertexSet::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    if (o.n_ != n_) throw std::invalid_argument("VertexSet universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    if (o.n_ != n_) throw std::invalid_argument("VertexSet universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    if (o.n_ != n_) throw std::invalid_argument("VertexSet universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& o) {
    if (o.n_ != n_) throw std::invalid_argument("VertexSet universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
}

bool VertexSet::subset_of(const VertexSet& o) const {
    if (o.n_ != n_) throw std::invalid_argument("VertexSet universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    if (o.n_ != n_) throw std::invalid_argument("VertexSet universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

std::uint32_t VertexSet::first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<std::uint32_t>(i * 64 + std::countr_zero(words_[i]));
    return npos;
}

std::uint32_t VertexSet::next(std::uint32_t v) const {
    std::uint32_t start = v + 1;
    if (start >= n_) return npos;
    std::size_t wi = start >> 6;
    std::uint64_t w = words_[wi] & (~0ull << (start & 63));
    while (true) {
        if (w) return static_cast<std::uint32_t>(wi * 64 + std::countr_zero(w));
        if (++wi >= words_.size()) return npos;
        w = words_[wi];
    }
}

std::vector<std::uint32_t> VertexSet::members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for (std::uint32_t v = first(); v != npos; v = next(v)) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool sep = false;
    for (std::uint32_t v = first(); v != npos; v = next(v)) {
        if (sep) os << ',';
        os << v;
        sep = true;
    }
    os << '}';
    return os.str();
}

VertexSet VertexSet::resized(std::size_t new_universe) const {
    VertexSet r(new_universe);
    std::size_t nw = std::min(r.words_.size(), words_.size());
    for (std::size_t i = 0; i < nw; ++i) r.words_[i] = words_[i];
    r.trim();
    return r;
}

void VertexSet::trim() {
    if (n_ & 63) words_.back() &= (1ull << (n_ & 63)) - 1;
}

}  // namespace iim
