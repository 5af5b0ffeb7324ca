#pragma once

#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gmetric/kinds.hpp"
#include "gmetric/multiset_index.hpp"

namespace gmetric {

// A finite carrier with a complete symmetric value table for an arity-n
// generalized distance of a declared kind. Lookup of any ordered tuple
// returns the value of its sorted form, so the symmetry axiom holds by
// construction. Immutable after construction; all values finite.
class FiniteSpace {
public:
    // values[r] is the value of the r-th multiset in MultisetIndex order.
    FiniteSpace(std::vector<std::string> elements, MetricKind kind,
                std::vector<double> values);

    // Builds the table by evaluating fn on every sorted index tuple.
    static FiniteSpace
    from_function(std::vector<std::string> elements, MetricKind kind,
                  const std::function<double(std::span<const int>)>& fn);

    const MetricKind& kind() const { return kind_; }
    int arity() const { return kind_.arity; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& label(int i) const { return elements_[i]; }
    int index_of(const std::string& label) const; // -1 when absent
    int require_index(const std::string& label) const;

    const MultisetIndex& table_index() const { return index_; }
    const std::vector<double>& raw_values() const { return values_; }

    // Value of an arbitrary ordered tuple of element indices (length n).
    double value(std::span<const int> tuple) const;
    // Value of the tuple (<x>^{n-1}, y).
    double value_pow(int x, int y) const;
    // Self value P(<x>^n).
    double self(int x) const;

    // Same table reinterpreted under another kind (arity must match).
    FiniteSpace with_kind(MetricKind k) const;

private:
    std::vector<std::string> elements_;
    MetricKind kind_;
    MultisetIndex index_;
    std::vector<double> values_;
    std::unordered_map<std::string, int> by_label_;
};

} // namespace gmetric
