#pragma once

#include <vector>

#include "gmetric/evaluator.hpp"
#include "gmetric/tolerance.hpp"

namespace gmetric {

// Finite-prefix verdicts: "Cauchy up to tol over the tail window", numerical
// evidence rather than proof of the quantified definitions.
struct CauchyVerdict {
    bool is_cauchy = false;
    double central_distance = 0.0; // r, median of the tail samples
    double max_tail_deviation = 0.0;
    int window = 0;
};

enum class Orientation { Forward, Mirrored };

// Default window: last ceil(prefix/3) samples, at least 5 (capped at the
// prefix length).
int default_window(std::size_t prefix_len);

// Samples V(<x_i>^{n-1}, x_j) over i >= j in the tail window (the two-term
// reduction); Mirrored swaps the roles of i and j.
CauchyVerdict classify_cauchy(const DistanceEvaluator& eval,
                              const std::vector<Point>& prefix, Tolerance tol,
                              int window,
                              Orientation orientation = Orientation::Forward);

// V(<a>^{n-1}, x_i) - V(<a>^n) <= tol over the tail window.
bool check_limit(const DistanceEvaluator& eval, const std::vector<Point>& prefix,
                 const Point& candidate, Tolerance tol, int window);

// Limit whose self value equals the central distance. Requires a Cauchy
// prefix.
bool check_special_limit(const DistanceEvaluator& eval,
                         const std::vector<Point>& prefix, const Point& candidate,
                         Tolerance tol, int window);

// Shared central distance over the cross samples in both orientations, with
// the lower bound min{V(<x_i>^n), V(<y_i>^n)} <= cross value within tol.
CauchyVerdict check_cauchy_pair(const DistanceEvaluator& eval,
                                const std::vector<Point>& prefix_x,
                                const std::vector<Point>& prefix_y, Tolerance tol,
                                int window);

} // namespace gmetric
