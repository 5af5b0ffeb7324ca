#include "gmetric/multiset_index.hpp"

#include <cassert>
#include <stdexcept>

namespace gmetric {

MultisetIndex::MultisetIndex(int symbols, int size) : m_(symbols), n_(size) {
    if (symbols < 1 || size < 1)
        throw std::invalid_argument("MultisetIndex: need symbols >= 1 and size >= 1");
    suffix_count_.assign(size + 1, std::vector<std::size_t>(symbols + 1, 0));
    for (int v = 0; v <= symbols; ++v)
        suffix_count_[0][v] = 1;
    for (int k = 1; k <= size; ++k) {
        suffix_count_[k][symbols] = 0;
        for (int v = symbols - 1; v >= 0; --v)
            suffix_count_[k][v] = suffix_count_[k][v + 1] + suffix_count_[k - 1][v];
    }
    count_ = suffix_count_[size][0];
}

std::size_t MultisetIndex::rank(std::span<const int> t) const {
    assert((int)t.size() == n_);
    std::size_t r = 0;
    int lo = 0;
    for (int k = 0; k < n_; ++k) {
        assert(t[k] >= lo && t[k] < m_);
        for (int v = lo; v < t[k]; ++v)
            r += suffix_count_[n_ - k - 1][v];
        lo = t[k];
    }
    return r;
}

std::vector<int> MultisetIndex::unrank(std::size_t r) const {
    std::vector<int> t(n_);
    int lo = 0;
    for (int k = 0; k < n_; ++k) {
        int v = lo;
        while (r >= suffix_count_[n_ - k - 1][v]) {
            r -= suffix_count_[n_ - k - 1][v];
            ++v;
        }
        t[k] = v;
        lo = v;
    }
    return t;
}

} // namespace gmetric
