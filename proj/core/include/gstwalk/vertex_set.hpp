#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gstwalk {

/// Subset of the vertex universe {0,..,n-1} as a packed bit mask.
/// Vertices are 0-indexed here; all user-facing I/O is 1-indexed.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    /// Universe with the given members set (0-indexed).
    VertexSet(int universe, const std::vector<int>& members);

    static VertexSet full(int universe);

    int universe() const { return n_; }
    int count() const;
    bool empty() const { return count() == 0; }

    void set(int v);
    void reset(int v);
    bool test(int v) const;

    bool subset_of(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    VertexSet union_with(const VertexSet& o) const;
    VertexSet intersect_with(const VertexSet& o) const;
    VertexSet difference_with(const VertexSet& o) const;
    VertexSet complement() const;

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    /// Numeric order on the underlying mask; gives deterministic iteration.
    bool operator<(const VertexSet& o) const;

    /// Members in increasing order, 0-indexed.
    std::vector<int> members() const;
    /// "{2,5}" with 1-indexed vertices, for diagnostics.
    std::string to_string() const;

private:
    void check(int v) const;
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gstwalk
