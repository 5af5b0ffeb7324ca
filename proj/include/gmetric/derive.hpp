#pragma once

#include <span>

#include "gmetric/space.hpp"

namespace gmetric {

// d(x,y) = V(<x>^{n-1},y) - V(<x>^n) + V(<y>^{n-1},x) - V(<y>^n) on the same
// elements. Accepts every kind; a metric input comes back doubled since its
// self terms vanish.
FiniteSpace induce_metric(const FiniteSpace& space);

// Arity-n lift of a pairwise space: the value of an n-tuple is the sum of the
// pairwise values over all position pairs drawn from it. n = 2 returns the
// input unchanged; n >= 3 moves to the matching n-ary family.
FiniteSpace lift_to_n(const FiniteSpace& space, int n);

// Adds r to every entry of a metric / n-Metric table; the result is a strong
// partial (n-)metric. Partial inputs are rejected.
FiniteSpace shift_by_constant(const FiniteSpace& space, double r);

// RHS minus LHS of the term-replacement inequality with replacement terms
// ys[0..t-1]: V(xs) <= V(ys_1..ys_t, xs_{t+1}..xs_n)
//                      + sum_{j<=t} [V(<ys_j>^{n-1}, xs_j) - V(<ys_j>^n)].
// Nonnegative (within tolerance) on every valid space.
double term_replacement_margin(const FiniteSpace& space, std::span<const int> xs,
                               std::span<const int> ys, int t);

} // namespace gmetric
