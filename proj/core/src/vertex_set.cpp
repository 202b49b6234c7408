#include "gstwalk/vertex_set.hpp"

#include <bit>

#include "gstwalk/error.hpp"

namespace gstwalk {

namespace {
constexpr int kBits = 64;
inline std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + kBits - 1) / kBits; }
} // namespace

VertexSet::VertexSet(int universe) : n_(universe), words_(words_for(universe), 0) {
    if (universe < 0) throw Error("vertex set universe must be nonnegative");
}

VertexSet::VertexSet(int universe, const std::vector<int>& members) : VertexSet(universe) {
    for (int v : members) set(v);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    int rem = universe % kBits;
    if (rem != 0 && !s.words_.empty())
        s.words_.back() = (std::uint64_t{1} << rem) - 1;
    return s;
}

void VertexSet::check(int v) const {
    if (v < 0 || v >= n_)
        throw Error("vertex " + std::to_string(v + 1) + " outside universe of size " + std::to_string(n_));
}

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

void VertexSet::set(int v) {
    check(v);
    words_[v / kBits] |= std::uint64_t{1} << (v % kBits);
}

void VertexSet::reset(int v) {
    check(v);
    words_[v / kBits] &= ~(std::uint64_t{1} << (v % kBits));
}

bool VertexSet::test(int v) const {
    if (v < 0 || v >= n_) return false;
    return (words_[v / kBits] >> (v % kBits)) & 1;
}

bool VertexSet::subset_of(const VertexSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~o.words_[w]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & o.words_[w]) return true;
    return false;
}

VertexSet VertexSet::union_with(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] | o.words_[w];
    return r;
}

VertexSet VertexSet::intersect_with(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & o.words_[w];
    return r;
}

VertexSet VertexSet::difference_with(const VertexSet& o) const {
    VertexSet r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & ~o.words_[w];
    return r;
}

VertexSet VertexSet::complement() const {
    return full(n_).difference_with(*this);
}

bool VertexSet::operator<(const VertexSet& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t w = words_.size(); w-- > 0;)
        if (words_[w] != o.words_[w]) return words_[w] < o.words_[w];
    return false;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (test(v)) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : members()) {
        if (!first) s += ",";
        s += std::to_string(v + 1);
        first = false;
    }
    return s + "}";
}

} // namespace gstwalk
