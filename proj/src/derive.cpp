#include "gmetric/derive.hpp"

#include <stdexcept>
#include <vector>

namespace gmetric {

FiniteSpace induce_metric(const FiniteSpace& space) {
    return FiniteSpace::from_function(
        space.elements(), MetricKind(Family::Metric, 2),
        [&](std::span<const int> t) {
            const int x = t[0], y = t[1];
            return space.value_pow(x, y) - space.self(x) +
                   space.value_pow(y, x) - space.self(y);
        });
}

FiniteSpace lift_to_n(const FiniteSpace& space, int n) {
    if (!is_pairwise(space.kind().family))
        throw std::invalid_argument("lift_to_n: input must be pairwise");
    if (n < 2)
        throw std::invalid_argument("lift_to_n: n must be >= 2");
    if (n == 2)
        return space;
    MetricKind out_kind(n_ary_family(space.kind().family), n);
    return FiniteSpace::from_function(
        space.elements(), out_kind, [&](std::span<const int> t) {
            double sum = 0.0;
            for (std::size_t j = 1; j < t.size(); ++j)
                for (std::size_t i = 0; i < j; ++i)
                    sum += space.value_pow(t[i], t[j]);
            return sum;
        });
}

FiniteSpace shift_by_constant(const FiniteSpace& space, double r) {
    const Family f = space.kind().family;
    if (f != Family::Metric && f != Family::NMetric)
        throw std::invalid_argument(
            "shift_by_constant: input must be a metric or n-Metric");
    MetricKind out_kind(f == Family::Metric ? Family::StrongPartialMetric
                                            : Family::StrongPartialNMetric,
                        space.arity());
    std::vector<double> shifted = space.raw_values();
    for (double& v : shifted)
        v += r;
    return FiniteSpace(space.elements(), out_kind, std::move(shifted));
}

double term_replacement_margin(const FiniteSpace& space, std::span<const int> xs,
                               std::span<const int> ys, int t) {
    const int n = space.arity();
    if ((int)xs.size() != n || (int)ys.size() != n)
        throw std::invalid_argument("term_replacement_margin: tuples must have length n");
    if (t < 1 || t > n)
        throw std::invalid_argument("term_replacement_margin: t out of range");
    for (int i : xs)
        if (i < 0 || i >= space.size())
            throw std::invalid_argument("term_replacement_margin: index out of range");
    for (int i : ys)
        if (i < 0 || i >= space.size())
            throw std::invalid_argument("term_replacement_margin: index out of range");

    const double lhs = space.value(xs);
    std::vector<int> mixed(xs.begin(), xs.end());
    for (int j = 0; j < t; ++j)
        mixed[j] = ys[j];
    double rhs = space.value(mixed);
    for (int j = 0; j < t; ++j)
        rhs += space.value_pow(ys[j], xs[j]) - space.self(ys[j]);
    return rhs - lhs;
}

} // namespace gmetric
