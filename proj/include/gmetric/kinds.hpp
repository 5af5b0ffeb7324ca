#pragma once

#include <stdexcept>
#include <string>

namespace gmetric {

enum class Family {
    Metric,
    PartialMetric,
    StrongPartialMetric,
    NMetric,
    PartialNMetric,
    StrongPartialNMetric,
};

constexpr bool is_pairwise(Family f) {
    return f == Family::Metric || f == Family::PartialMetric ||
           f == Family::StrongPartialMetric;
}

// Self-distances may be nonzero for these families.
constexpr bool is_partial(Family f) {
    return f == Family::PartialMetric || f == Family::StrongPartialMetric ||
           f == Family::PartialNMetric || f == Family::StrongPartialNMetric;
}

constexpr bool is_strong(Family f) {
    return f == Family::StrongPartialMetric || f == Family::StrongPartialNMetric;
}

// The arity-n counterpart of a pairwise family (and vice versa).
constexpr Family n_ary_family(Family f) {
    switch (f) {
    case Family::Metric: return Family::NMetric;
    case Family::PartialMetric: return Family::PartialNMetric;
    case Family::StrongPartialMetric: return Family::StrongPartialNMetric;
    default: return f;
    }
}

constexpr Family pairwise_family(Family f) {
    switch (f) {
    case Family::NMetric: return Family::Metric;
    case Family::PartialNMetric: return Family::PartialMetric;
    case Family::StrongPartialNMetric: return Family::StrongPartialMetric;
    default: return f;
    }
}

// Distance kind: family plus arity. Arity is 2 exactly for the pairwise
// families; the n-ary families carry n >= 3.
struct MetricKind {
    Family family = Family::Metric;
    int arity = 2;

    MetricKind() = default;
    MetricKind(Family f, int n) : family(f), arity(n) {
        if (n < 2)
            throw std::invalid_argument("MetricKind: arity must be >= 2");
        if (is_pairwise(f) != (n == 2))
            throw std::invalid_argument(
                "MetricKind: arity 2 is reserved for the pairwise families");
    }

    bool operator==(const MetricKind&) const = default;
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

} // namespace gmetric
