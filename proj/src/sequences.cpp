#include "gmetric/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gmetric {

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size();
    return k % 2 ? v[k / 2] : (v[k / 2 - 1] + v[k / 2]) / 2;
}

std::size_t window_start(std::size_t prefix_len, int window) {
    if (window < 2)
        throw std::invalid_argument("window must be >= 2");
    if ((std::size_t)window > prefix_len)
        throw std::invalid_argument("window larger than prefix");
    return prefix_len - (std::size_t)window;
}

} // namespace

int default_window(std::size_t prefix_len) {
    const std::size_t w = std::max<std::size_t>((prefix_len + 2) / 3, 5);
    return static_cast<int>(std::min(w, prefix_len));
}

CauchyVerdict classify_cauchy(const DistanceEvaluator& eval,
                              const std::vector<Point>& prefix, Tolerance tol,
                              int window, Orientation orientation) {
    const std::size_t start = window_start(prefix.size(), window);
    std::vector<double> samples;
    for (std::size_t i = start; i < prefix.size(); ++i)
        for (std::size_t j = start; j <= i; ++j)
            samples.push_back(orientation == Orientation::Forward
                                  ? eval.value_pow(prefix[i], prefix[j])
                                  : eval.value_pow(prefix[j], prefix[i]));

    CauchyVerdict v;
    v.window = window;
    v.central_distance = median(samples);
    for (double s : samples)
        v.max_tail_deviation =
            std::max(v.max_tail_deviation, std::abs(s - v.central_distance));
    v.is_cauchy = v.max_tail_deviation <= tol.abs;
    return v;
}

bool check_limit(const DistanceEvaluator& eval, const std::vector<Point>& prefix,
                 const Point& candidate, Tolerance tol, int window) {
    const std::size_t start = window_start(prefix.size(), window);
    const double self = eval.self(candidate);
    for (std::size_t i = start; i < prefix.size(); ++i)
        if (eval.value_pow(candidate, prefix[i]) - self > tol.abs)
            return false;
    return true;
}

bool check_special_limit(const DistanceEvaluator& eval,
                         const std::vector<Point>& prefix, const Point& candidate,
                         Tolerance tol, int window) {
    const auto verdict = classify_cauchy(eval, prefix, tol, window);
    if (!verdict.is_cauchy)
        throw std::invalid_argument("check_special_limit: prefix is not Cauchy "
                                    "within the tolerance");
    return check_limit(eval, prefix, candidate, tol, window) &&
           tol.eq(verdict.central_distance, eval.self(candidate));
}

CauchyVerdict check_cauchy_pair(const DistanceEvaluator& eval,
                                const std::vector<Point>& prefix_x,
                                const std::vector<Point>& prefix_y, Tolerance tol,
                                int window) {
    if (prefix_x.size() != prefix_y.size())
        throw std::invalid_argument("check_cauchy_pair: prefixes differ in length");
    const std::size_t start = window_start(prefix_x.size(), window);

    struct Sample {
        double cross;
        double min_self; // min of the two self values at the larger index
    };
    std::vector<Sample> samples;
    std::vector<double> cross_values;
    for (std::size_t i = start; i < prefix_x.size(); ++i) {
        const double min_self =
            std::min(eval.self(prefix_x[i]), eval.self(prefix_y[i]));
        for (std::size_t j = start; j <= i; ++j) {
            samples.push_back({eval.value_pow(prefix_x[i], prefix_y[j]), min_self});
            samples.push_back({eval.value_pow(prefix_x[j], prefix_y[i]), min_self});
        }
    }
    for (const auto& s : samples)
        cross_values.push_back(s.cross);

    CauchyVerdict v;
    v.window = window;
    v.central_distance = median(cross_values);
    bool lower_ok = true;
    for (const auto& s : samples) {
        v.max_tail_deviation =
            std::max(v.max_tail_deviation, std::abs(s.cross - v.central_distance));
        // r - tol <= min{self} <= cross within tol
        if (s.min_self - v.central_distance < -tol.abs ||
            s.min_self - s.cross > tol.abs)
            lower_ok = false;
    }
    v.is_cauchy = lower_ok && v.max_tail_deviation <= tol.abs;
    return v;
}

} // namespace gmetric
