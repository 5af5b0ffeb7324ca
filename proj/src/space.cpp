#include "gmetric/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gmetric {

std::string family_name(Family f) {
    switch (f) {
    case Family::Metric: return "metric";
    case Family::PartialMetric: return "partial_metric";
    case Family::StrongPartialMetric: return "strong_partial_metric";
    case Family::NMetric: return "n_metric";
    case Family::PartialNMetric: return "partial_n_metric";
    case Family::StrongPartialNMetric: return "strong_partial_n_metric";
    }
    return "metric";
}

Family family_from_name(const std::string& name) {
    if (name == "metric") return Family::Metric;
    if (name == "partial_metric") return Family::PartialMetric;
    if (name == "strong_partial_metric") return Family::StrongPartialMetric;
    if (name == "n_metric") return Family::NMetric;
    if (name == "partial_n_metric") return Family::PartialNMetric;
    if (name == "strong_partial_n_metric") return Family::StrongPartialNMetric;
    throw std::invalid_argument("unknown kind: " + name);
}

FiniteSpace::FiniteSpace(std::vector<std::string> elements, MetricKind kind,
                         std::vector<double> values)
    : elements_(std::move(elements)), kind_(kind),
      index_(static_cast<int>(elements_.size()), kind.arity),
      values_(std::move(values)) {
    if (elements_.empty())
        throw std::invalid_argument("FiniteSpace: no elements");
    if (kind.arity > 16)
        throw std::invalid_argument("FiniteSpace: arity above 16 is unsupported");
    if (values_.size() != index_.count())
        throw std::invalid_argument("FiniteSpace: incomplete value table");
    for (double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument("FiniteSpace: non-finite value");
    for (int i = 0; i < size(); ++i) {
        if (!by_label_.emplace(elements_[i], i).second)
            throw std::invalid_argument("FiniteSpace: duplicate element label '" +
                                        elements_[i] + "'");
    }
}

FiniteSpace FiniteSpace::from_function(
    std::vector<std::string> elements, MetricKind kind,
    const std::function<double(std::span<const int>)>& fn) {
    MultisetIndex idx(static_cast<int>(elements.size()), kind.arity);
    std::vector<double> values(idx.count());
    for (std::size_t r = 0; r < idx.count(); ++r) {
        auto tuple = idx.unrank(r);
        values[r] = fn(tuple);
    }
    return FiniteSpace(std::move(elements), kind, std::move(values));
}

int FiniteSpace::index_of(const std::string& label) const {
    auto it = by_label_.find(label);
    return it == by_label_.end() ? -1 : it->second;
}

int FiniteSpace::require_index(const std::string& label) const {
    int i = index_of(label);
    if (i < 0)
        throw std::invalid_argument("unknown element '" + label + "'");
    return i;
}

double FiniteSpace::value(std::span<const int> tuple) const {
    if ((int)tuple.size() != arity())
        throw std::invalid_argument("value: tuple length does not match arity");
    int buf[16];
    std::copy(tuple.begin(), tuple.end(), buf);
    std::sort(buf, buf + tuple.size());
    return values_[index_.rank(std::span<const int>(buf, tuple.size()))];
}

double FiniteSpace::value_pow(int x, int y) const {
    int buf[16];
    int n = arity();
    if (x <= y) {
        std::fill(buf, buf + n - 1, x);
        buf[n - 1] = y;
    } else {
        buf[0] = y;
        std::fill(buf + 1, buf + n, x);
    }
    return values_[index_.rank(std::span<const int>(buf, n))];
}

double FiniteSpace::self(int x) const {
    int buf[16];
    std::fill(buf, buf + arity(), x);
    return values_[index_.rank(std::span<const int>(buf, arity()))];
}

FiniteSpace FiniteSpace::with_kind(MetricKind k) const {
    if (k.arity != kind_.arity)
        throw std::invalid_argument("with_kind: arity mismatch");
    return FiniteSpace(elements_, k, values_);
}

} // namespace gmetric
