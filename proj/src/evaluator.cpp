#include "gmetric/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gmetric/catalog.hpp"

namespace gmetric {

Point Point::parse(const std::string& text) {
    if (!text.empty()) {
        char* end = nullptr;
        double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str() + text.size())
            return Point(v);
    }
    return Point(text);
}

double DistanceEvaluator::value_pow(const Point& x, const Point& y) const {
    std::vector<Point> t(static_cast<std::size_t>(arity()), x);
    t.back() = y;
    return value(t);
}

double DistanceEvaluator::self(const Point& x) const {
    std::vector<Point> t(static_cast<std::size_t>(arity()), x);
    return value(t);
}

namespace {

class SpaceEvaluator final : public DistanceEvaluator {
public:
    explicit SpaceEvaluator(FiniteSpace s) : space_(std::move(s)) {}
    int arity() const override { return space_.arity(); }
    double value(std::span<const Point> tuple) const override {
        std::vector<int> idx;
        idx.reserve(tuple.size());
        for (const auto& p : tuple)
            idx.push_back(space_.require_index(p.str()));
        return space_.value(idx);
    }

private:
    FiniteSpace space_;
};

class FnEvaluator final : public DistanceEvaluator {
public:
    FnEvaluator(int n, std::function<double(std::span<const Point>)> fn,
                std::string name)
        : n_(n), fn_(std::move(fn)), name_(std::move(name)) {}
    int arity() const override { return n_; }
    double value(std::span<const Point> tuple) const override {
        if ((int)tuple.size() != n_)
            throw std::invalid_argument("evaluator '" + name_ + "': bad tuple length");
        return fn_(tuple);
    }

private:
    int n_;
    std::function<double(std::span<const Point>)> fn_;
    std::string name_;
};

double need_real(const Point& p) {
    if (!p.is_real())
        throw std::invalid_argument("point '" + p.label() + "' is not a real");
    return p.real();
}

bool is_sentinel(const Point& p) {
    return !p.is_real() && p.label() == kSentinelLabel;
}

bool all_equal(std::span<const Point> t) {
    return std::all_of(t.begin(), t.end(), [&](const Point& p) { return p == t[0]; });
}

} // namespace

EvaluatorPtr make_space_evaluator(FiniteSpace space) {
    return std::make_shared<SpaceEvaluator>(std::move(space));
}

EvaluatorPtr make_evaluator(int arity,
                            std::function<double(std::span<const Point>)> fn,
                            std::string name) {
    return std::make_shared<FnEvaluator>(arity, std::move(fn), std::move(name));
}

EvaluatorPtr evaluator_by_name(const std::string& name, int arity, double param) {
    auto require_pairwise = [&] {
        if (arity != 2)
            throw std::invalid_argument("evaluator '" + name + "' is pairwise");
    };
    if (name == "max_partial") {
        if (arity < 2)
            throw std::invalid_argument("arity must be >= 2");
        return make_evaluator(
            arity,
            [](std::span<const Point> t) {
                double mx = need_real(t[0]);
                for (const auto& p : t)
                    mx = std::max(mx, need_real(p));
                return mx;
            },
            name);
    }
    if (name == "augmented_real_line") {
        require_pairwise();
        return make_evaluator(
            2,
            [](std::span<const Point> t) {
                const bool ax = is_sentinel(t[0]), ay = is_sentinel(t[1]);
                if (ax && ay)
                    return 0.0;
                if (ax)
                    return std::abs(need_real(t[1]));
                if (ay)
                    return std::abs(need_real(t[0]));
                return std::abs(need_real(t[0]) - need_real(t[1])) - 1.0;
            },
            name);
    }
    if (name == "positive_real_strong") {
        require_pairwise();
        return make_evaluator(
            2,
            [](std::span<const Point> t) {
                const double x = need_real(t[0]), y = need_real(t[1]);
                return x == y ? x : x + y;
            },
            name);
    }
    if (name == "abs_metric") {
        require_pairwise();
        return make_evaluator(
            2,
            [](std::span<const Point> t) {
                return std::abs(need_real(t[0]) - need_real(t[1]));
            },
            name);
    }
    if (name == "shifted_abs") {
        require_pairwise();
        return make_evaluator(
            2,
            [param](std::span<const Point> t) {
                return std::abs(need_real(t[0]) - need_real(t[1])) + param;
            },
            name);
    }
    if (name == "unit_n") {
        return make_evaluator(
            arity,
            [](std::span<const Point> t) { return all_equal(t) ? 0.0 : 1.0; }, name);
    }
    if (name == "discrete_pm11") {
        return make_evaluator(
            arity,
            [](std::span<const Point> t) { return all_equal(t) ? -1.0 : 1.0; }, name);
    }
    throw std::invalid_argument("unknown evaluator: " + name);
}

std::vector<std::string> evaluator_names() {
    return {"abs_metric",   "augmented_real_line", "discrete_pm11", "max_partial",
            "positive_real_strong", "shifted_abs", "unit_n"};
}

} // namespace gmetric
