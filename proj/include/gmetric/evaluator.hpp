#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gmetric/point.hpp"
#include "gmetric/space.hpp"

namespace gmetric {

// A total symmetric real-valued function on n-tuples of points. Backs the
// sequence and solver machinery for carriers that are not finite tables
// (closed-form real-line spaces) as well as for FiniteSpace.
class DistanceEvaluator {
public:
    virtual ~DistanceEvaluator() = default;
    virtual int arity() const = 0;
    virtual double value(std::span<const Point> tuple) const = 0;

    // V(<x>^{n-1}, y)
    double value_pow(const Point& x, const Point& y) const;
    // V(<x>^n)
    double self(const Point& x) const;
};

using EvaluatorPtr = std::shared_ptr<const DistanceEvaluator>;

EvaluatorPtr make_space_evaluator(FiniteSpace space);
EvaluatorPtr make_evaluator(int arity,
                            std::function<double(std::span<const Point>)> fn,
                            std::string name = "custom");

// Closed-form carriers by name:
//   max_partial            max of the tuple (reals)
//   augmented_real_line    pairwise; sentinel "@a": p(a,a)=0, p(a,x)=|x|,
//                          p(x,y)=|x-y|-1
//   positive_real_strong   pairwise; s(x,x)=x, s(x,y)=x+y
//   abs_metric             pairwise; |x-y|
//   shifted_abs            pairwise; |x-y| + r
//   unit_n                 0 on constant tuples, 1 otherwise
//   discrete_pm11          -1 on constant tuples, +1 otherwise
// Pairwise families reject arity != 2.
EvaluatorPtr evaluator_by_name(const std::string& name, int arity = 2,
                               double param = 0.0);

std::vector<std::string> evaluator_names();

} // namespace gmetric
