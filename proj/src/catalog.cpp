#include "gmetric/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "gmetric/numfmt.hpp"

namespace gmetric {

namespace {

std::vector<std::string> real_labels(const std::vector<double>& points) {
    std::set<double> seen(points.begin(), points.end());
    if (seen.size() != points.size())
        throw std::invalid_argument("catalog: duplicate sample points");
    if (points.empty())
        throw std::invalid_argument("catalog: sample point list is empty");
    std::vector<std::string> labels;
    for (double p : points)
        labels.push_back(format_real(p));
    return labels;
}

// Pairwise family when n == 2, the n-ary one otherwise.
MetricKind arity_kind(Family n_ary, int n) {
    if (n == 2)
        return MetricKind(pairwise_family(n_ary), 2);
    return MetricKind(n_ary, n);
}

std::vector<std::string> integer_labels(int count) {
    if (count < 1)
        throw std::invalid_argument("catalog: element count must be >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < count; ++i)
        labels.push_back(std::to_string(i));
    return labels;
}

} // namespace

FiniteSpace build_space(const CatalogSpec& spec) {
    switch (spec.name) {
    case CatalogName::basic_partial: {
        // p(x,x)=0, p(x,y)=1, p(y,y)=1 on {x,y}
        return FiniteSpace({"x", "y"}, MetricKind(Family::PartialMetric, 2),
                           {0.0, 1.0, 1.0});
    }
    case CatalogName::max_partial: {
        auto labels = real_labels(spec.points);
        const auto& pts = spec.points;
        return FiniteSpace::from_function(
            labels, MetricKind(Family::PartialMetric, 2),
            [&](std::span<const int> t) { return std::max(pts[t[0]], pts[t[1]]); });
    }
    case CatalogName::augmented_real_line: {
        // index 0 is the sentinel; reals follow
        auto labels = real_labels(spec.points);
        labels.insert(labels.begin(), kSentinelLabel);
        const auto& pts = spec.points;
        return FiniteSpace::from_function(
            labels, MetricKind(Family::PartialMetric, 2),
            [&](std::span<const int> t) {
                const int x = t[0], y = t[1];
                if (x == 0 && y == 0)
                    return 0.0;
                if (x == 0)
                    return std::abs(pts[y - 1]);
                return std::abs(pts[x - 1] - pts[y - 1]) - 1.0;
            });
    }
    case CatalogName::positive_real_strong: {
        for (double p : spec.points)
            if (p <= 0)
                throw std::invalid_argument(
                    "positive_real_strong: sample points must be positive");
        auto labels = real_labels(spec.points);
        const auto& pts = spec.points;
        return FiniteSpace::from_function(
            labels, MetricKind(Family::StrongPartialMetric, 2),
            [&](std::span<const int> t) {
                return t[0] == t[1] ? pts[t[0]] : pts[t[0]] + pts[t[1]];
            });
    }
    case CatalogName::unit_n: {
        auto labels = integer_labels(spec.count);
        return FiniteSpace::from_function(
            labels, arity_kind(Family::NMetric, spec.arity),
            [](std::span<const int> t) {
                return std::all_of(t.begin(), t.end(),
                                   [&](int i) { return i == t[0]; })
                           ? 0.0
                           : 1.0;
            });
    }
    case CatalogName::five_metric_negative: {
        // Table on {a,b}: constant tuples 0; by count of b's: 3, -1, 2, 4.
        MultisetIndex idx(2, 5);
        std::vector<double> values(idx.count());
        const double by_b_count[6] = {0.0, 3.0, -1.0, 2.0, 4.0, 0.0};
        for (std::size_t r = 0; r < idx.count(); ++r) {
            auto t = idx.unrank(r);
            int bs = 0;
            for (int i : t)
                bs += (i == 1);
            values[r] = by_b_count[bs];
        }
        return FiniteSpace({"a", "b"}, MetricKind(Family::NMetric, 5),
                           std::move(values));
    }
    case CatalogName::discrete_pm11: {
        auto labels = integer_labels(spec.count);
        return FiniteSpace::from_function(
            labels, arity_kind(Family::PartialNMetric, spec.arity),
            [](std::span<const int> t) {
                return std::all_of(t.begin(), t.end(),
                                   [&](int i) { return i == t[0]; })
                           ? -1.0
                           : 1.0;
            });
    }
    case CatalogName::max_partial_n: {
        auto labels = real_labels(spec.points);
        const auto& pts = spec.points;
        return FiniteSpace::from_function(
            labels, arity_kind(Family::PartialNMetric, spec.arity),
            [&](std::span<const int> t) {
                double mx = pts[t[0]];
                for (int i : t)
                    mx = std::max(mx, pts[i]);
                return mx;
            });
    }
    }
    throw std::invalid_argument("unknown catalog name");
}

FiniteSpace sample_real_space(CatalogName family, double lo, double hi, int count,
                              int arity) {
    if (!(lo < hi))
        throw std::invalid_argument("sample_real_space: need lo < hi");
    if (count < 2)
        throw std::invalid_argument("sample_real_space: need count >= 2");
    CatalogSpec spec;
    spec.name = family;
    spec.arity = arity;
    for (int k = 0; k < count; ++k)
        spec.points.push_back(lo + k * (hi - lo) / (count - 1));
    return build_space(spec);
}

std::vector<CatalogInfo> catalog_list() {
    std::vector<CatalogInfo> list = {
        {"augmented_real_line", "partial_metric", "points (reals; sentinel @a added)"},
        {"basic_partial", "partial_metric", "none (fixed two-point table)"},
        {"discrete_pm11", "partial_n_metric", "arity n >= 2, element count m"},
        {"five_metric_negative", "n_metric", "none (fixed arity-5 table on {a,b})"},
        {"max_partial", "partial_metric", "points (reals)"},
        {"max_partial_n", "partial_n_metric", "arity n >= 2, points (reals)"},
        {"positive_real_strong", "strong_partial_metric", "points (positive reals)"},
        {"unit_n", "n_metric", "arity n >= 2, element count m"},
    };
    std::sort(list.begin(), list.end(),
              [](const CatalogInfo& a, const CatalogInfo& b) { return a.name < b.name; });
    return list;
}

CatalogName catalog_name_from_string(const std::string& s) {
    if (s == "basic_partial") return CatalogName::basic_partial;
    if (s == "max_partial") return CatalogName::max_partial;
    if (s == "augmented_real_line") return CatalogName::augmented_real_line;
    if (s == "positive_real_strong") return CatalogName::positive_real_strong;
    if (s == "unit_n") return CatalogName::unit_n;
    if (s == "five_metric_negative") return CatalogName::five_metric_negative;
    if (s == "discrete_pm11") return CatalogName::discrete_pm11;
    if (s == "max_partial_n") return CatalogName::max_partial_n;
    throw std::invalid_argument("unknown catalog space: " + s);
}

std::string catalog_name_to_string(CatalogName n) {
    switch (n) {
    case CatalogName::basic_partial: return "basic_partial";
    case CatalogName::max_partial: return "max_partial";
    case CatalogName::augmented_real_line: return "augmented_real_line";
    case CatalogName::positive_real_strong: return "positive_real_strong";
    case CatalogName::unit_n: return "unit_n";
    case CatalogName::five_metric_negative: return "five_metric_negative";
    case CatalogName::discrete_pm11: return "discrete_pm11";
    case CatalogName::max_partial_n: return "max_partial_n";
    }
    return "";
}

} // namespace gmetric
