#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gmetric {

// Ranks sorted index tuples (multisets of size n over m symbols) into
// 0..C(m+n-1,n)-1, lexicographic order. Backing store for the symmetric
// value tables: one slot per multiset instead of m^n entries.
class MultisetIndex {
public:
    MultisetIndex() = default;
    MultisetIndex(int symbols, int size);

    int symbols() const { return m_; }
    int size() const { return n_; }
    std::size_t count() const { return count_; }

    // tuple must be sorted ascending, length n, entries in [0, m).
    std::size_t rank(std::span<const int> sorted_tuple) const;

    // Inverse of rank.
    std::vector<int> unrank(std::size_t r) const;

private:
    int m_ = 0;
    int n_ = 0;
    std::size_t count_ = 0;
    // suffix_count_[k][v] = number of sorted k-tuples over symbols {v..m-1}
    std::vector<std::vector<std::size_t>> suffix_count_;
};

} // namespace gmetric
