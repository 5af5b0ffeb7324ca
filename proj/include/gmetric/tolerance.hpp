#pragma once

#include <stdexcept>

namespace gmetric {

// Absolute slack for all numeric verdicts. Non-strict inequalities pass when
// violated by at most abs; strict inequalities require a margin above abs.
struct Tolerance {
    double abs = 1e-9;

    Tolerance() = default;
    explicit Tolerance(double a) : abs(a) {
        if (a < 0)
            throw std::invalid_argument("Tolerance: abs must be >= 0");
    }

    bool leq(double lhs, double rhs) const { return lhs <= rhs + abs; }
    bool lt(double lhs, double rhs) const { return rhs - lhs > abs; }
    bool eq(double a, double b) const { return a - b <= abs && b - a <= abs; }
};

} // namespace gmetric
