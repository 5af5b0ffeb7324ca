#include "gmetric/fixedpoint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gmetric {

namespace {

Point apply_map(const MapSpec& f, const Point& p, int index) {
    try {
        return f(p);
    } catch (const std::exception& e) {
        throw MapEvalError("map '" + f.name + "' failed at iterate " +
                               std::to_string(index) + ": " + e.what(),
                           index);
    }
}

void note(ContractionVerdict& v, InequalityVerdict iv) {
    v.holds = v.holds && iv.holds;
    v.inequalities.push_back(std::move(iv));
}

// Grid validation of a user-supplied phi: phi(r) = 0 and non-decreasing.
void require_admissible_phi(const std::function<double(double)>& phi, double r,
                            double span, Tolerance tol) {
    if (!phi)
        throw std::invalid_argument("orbital_phi: no phi supplied");
    if (std::abs(phi(r)) > tol.abs)
        throw std::invalid_argument("orbital_phi: phi(r) must be 0");
    const int grid = 100;
    double prev = phi(r);
    for (int k = 1; k <= grid; ++k) {
        const double t = r + span * k / grid;
        const double cur = phi(t);
        if (cur < prev - tol.abs)
            throw std::invalid_argument("orbital_phi: phi must be non-decreasing");
        prev = std::max(prev, cur);
    }
}

} // namespace

const InequalityVerdict* ContractionVerdict::find(const std::string& name) const {
    for (const auto& iv : inequalities)
        if (iv.name == name)
            return &iv;
    return nullptr;
}

bool SolveResult::all_checks_pass() const {
    for (const auto& [name, ok] : checks)
        if (!ok)
            return false;
    return true;
}

const char* status_name(SolveStatus s) {
    switch (s) {
    case SolveStatus::fixed_point: return "fixed_point";
    case SolveStatus::common_fixed_point: return "common_fixed_point";
    case SolveStatus::coincidence_point: return "coincidence_point";
    case SolveStatus::no_certificate: return "no_certificate";
    }
    return "no_certificate";
}

Point snap_point(const Point& p, double grid) {
    if (!p.is_real() || !(grid > 0))
        return p;
    return Point(std::round(p.real() / grid) * grid);
}

bool points_equal(const Point& a, const Point& b, double point_tol) {
    if (a.is_real() != b.is_real())
        return false;
    if (a.is_real())
        return std::abs(a.real() - b.real()) <= point_tol;
    return a.label() == b.label();
}

OrbitTrace iterate_orbit(const MapSpec& f, const Point& x0, int max_iter,
                         const DistanceEvaluator& eval, Tolerance tol, int window) {
    if (max_iter < 2)
        throw std::invalid_argument("iterate_orbit: max_iter must be >= 2");

    OrbitTrace trace;
    trace.points.push_back(x0);
    bool stabilized = false;
    for (int i = 0; i < max_iter && !stabilized; ++i) {
        Point next = apply_map(f, trace.points.back(), i);
        stabilized = next == trace.points.back();
        trace.points.push_back(std::move(next));
        trace.iterations = i + 1;
    }
    // An exactly stabilized orbit continues constantly; extend it so the
    // tail window exists. Non-stabilized prefixes are never padded.
    if (stabilized) {
        const std::size_t want =
            std::max<std::size_t>(static_cast<std::size_t>(std::max(window, 0)), 5) +
            1;
        while (trace.points.size() < want)
            trace.points.push_back(trace.points.back());
    }

    for (std::size_t i = 0; i < trace.points.size(); ++i) {
        trace.self_values.push_back(eval.self(trace.points[i]));
        if (i + 1 < trace.points.size())
            trace.step_values.push_back(
                eval.value_pow(trace.points[i], trace.points[i + 1]));
    }
    const int w = window > 0 ? window : default_window(trace.points.size());
    trace.verdict = classify_cauchy(eval, trace.points, tol, w);
    return trace;
}

ContractionVerdict check_orbital_contraction(const OrbitTrace& trace,
                                             const ContractionSpec& spec,
                                             const DistanceEvaluator& eval,
                                             Tolerance tol) {
    if (spec.mode != ContractionMode::orbital_c &&
        spec.mode != ContractionMode::orbital_phi)
        throw std::invalid_argument(
            "check_orbital_contraction: spec mode is not an orbital mode");
    if (trace.points.size() < 3)
        throw std::invalid_argument("check_orbital_contraction: trace too short");

    const double r = spec.r_supplied ? spec.r : trace.verdict.central_distance;
    ContractionVerdict verdict;
    verdict.r_used = r;
    const std::size_t len = trace.points.size();

    if (spec.mode == ContractionMode::orbital_c) {
        if (!(spec.c > 0 && spec.c < 1))
            throw std::invalid_argument("orbital_c: c must lie in (0,1)");
        // Floor: r below the self values along the orbit.
        InequalityVerdict floor_iv{"central_floor"};
        const std::size_t floor_from = eval.arity() == 2 ? 0 : 1;
        for (std::size_t i = floor_from; i < len; ++i)
            if (trace.self_values[i] < r - tol.abs) {
                floor_iv.holds = false;
                floor_iv.first_violation = static_cast<int>(i);
                floor_iv.margin = r - trace.self_values[i];
                break;
            }
        note(verdict, std::move(floor_iv));

        // Geometric step bound. The pairwise display indexes the bound with
        // c^{i+1} on the step into x_{i+2}; the n-ary display uses c^i on the
        // step out of x_i.
        InequalityVerdict step_iv{"step_bound"};
        const double big_m = std::abs(trace.step_values.empty()
                                          ? 0.0
                                          : trace.step_values.front());
        if (eval.arity() == 2) {
            for (std::size_t i = 0; i + 2 < len; ++i) {
                const double lhs = trace.step_values[i + 1];
                const double rhs = r + std::pow(spec.c, double(i + 1)) * big_m;
                if (lhs > rhs + tol.abs) {
                    step_iv.holds = false;
                    step_iv.first_violation = static_cast<int>(i);
                    step_iv.margin = lhs - rhs;
                    break;
                }
            }
        } else {
            for (std::size_t i = 0; i + 1 < len; ++i) {
                const double lhs = trace.step_values[i];
                const double rhs = r + std::pow(spec.c, double(i)) * big_m;
                if (lhs > rhs + tol.abs) {
                    step_iv.holds = false;
                    step_iv.first_violation = static_cast<int>(i);
                    step_iv.margin = lhs - rhs;
                    break;
                }
            }
        }
        note(verdict, std::move(step_iv));
        return verdict;
    }

    // orbital_phi
    double span = 1.0;
    for (std::size_t i = 0; i + 1 < len; ++i)
        for (std::size_t j = 0; j + 1 < len; ++j)
            span = std::max(span, eval.value_pow(trace.points[i], trace.points[j]) - r);
    require_admissible_phi(spec.phi, r, span, tol);

    InequalityVerdict floor_iv{"central_floor"};
    for (std::size_t i = 0; i < len; ++i)
        if (trace.self_values[i] < r - tol.abs) {
            floor_iv.holds = false;
            floor_iv.first_violation = static_cast<int>(i);
            floor_iv.margin = r - trace.self_values[i];
            break;
        }
    note(verdict, std::move(floor_iv));

    InequalityVerdict phi_iv{"phi_step"};
    for (std::size_t i = 0; i + 1 < len && phi_iv.holds; ++i)
        for (std::size_t j = 0; j + 1 < len; ++j) {
            const double cur = eval.value_pow(trace.points[i], trace.points[j]);
            const double nxt =
                eval.value_pow(trace.points[i + 1], trace.points[j + 1]);
            if (nxt > cur - spec.phi(cur) + tol.abs) {
                phi_iv.holds = false;
                phi_iv.first_violation = static_cast<int>(i);
                phi_iv.margin = nxt - (cur - spec.phi(cur));
                break;
            }
        }
    note(verdict, std::move(phi_iv));
    return verdict;
}

ContractionVerdict check_pairwise_contraction(const OrbitTrace& fx,
                                              const OrbitTrace& gy,
                                              const ContractionSpec& spec,
                                              const DistanceEvaluator& eval,
                                              Tolerance tol) {
    if (spec.mode != ContractionMode::pairwise_c)
        throw std::invalid_argument(
            "check_pairwise_contraction: spec mode must be pairwise_c");
    if (!(spec.c > 0 && spec.c < 1))
        throw std::invalid_argument("pairwise_c: c must lie in (0,1)");
    const std::size_t len = std::min(fx.points.size(), gy.points.size());
    if (len < 2)
        throw std::invalid_argument("check_pairwise_contraction: orbits too short");

    const double r = spec.r_supplied ? spec.r : fx.verdict.central_distance;
    ContractionVerdict verdict;
    verdict.r_used = r;

    const double big_m =
        std::max(std::abs(eval.value_pow(fx.points[1], gy.points[0])),
                 std::abs(eval.value_pow(fx.points[0], gy.points[0])));

    InequalityVerdict floor_iv{"central_floor"};
    for (std::size_t i = 0; i < len; ++i) {
        const double ms = std::min(fx.self_values[i], gy.self_values[i]);
        if (ms < r - tol.abs) {
            floor_iv.holds = false;
            floor_iv.first_violation = static_cast<int>(i);
            floor_iv.margin = r - ms;
            break;
        }
    }
    note(verdict, std::move(floor_iv));

    InequalityVerdict step_iv{"cross_bound"};
    for (std::size_t i = 0; i < len; ++i) {
        const double bound = r + std::pow(spec.c, double(i)) * big_m;
        const double same = eval.value_pow(fx.points[i], gy.points[i]);
        double worst = same;
        if (i + 1 < len)
            worst = std::max(worst, eval.value_pow(fx.points[i + 1], gy.points[i]));
        if (worst > bound + tol.abs) {
            step_iv.holds = false;
            step_iv.first_violation = static_cast<int>(i);
            step_iv.margin = worst - bound;
            break;
        }
    }
    note(verdict, std::move(step_iv));
    return verdict;
}

SampleVerdict check_nonexpansive(const MapSpec& f, const DistanceEvaluator& eval,
                                 const std::vector<std::pair<Point, Point>>& samples,
                                 Tolerance tol) {
    if (samples.empty())
        throw std::invalid_argument("check_nonexpansive: no samples");
    SampleVerdict v;
    for (const auto& [x, y] : samples) {
        const double before = eval.value_pow(x, y);
        const double after = eval.value_pow(f(x), f(y));
        if (after > before + tol.abs) {
            v.holds = false;
            v.witness = {x, y};
            v.margin = after - before;
            return v;
        }
    }
    return v;
}

SampleVerdict check_consistent(const MapSpec& f, const DistanceEvaluator& eval_domain,
                               const DistanceEvaluator& eval_codomain,
                               const std::vector<std::pair<Point, Point>>& samples,
                               Tolerance tol) {
    if (samples.empty())
        throw std::invalid_argument("check_consistent: no samples");
    SampleVerdict v;
    for (const auto& [x, z] : samples) {
        if (eval_domain.self(x) <= eval_domain.self(z) + tol.abs) {
            const double fx = eval_codomain.self(f(x));
            const double fz = eval_codomain.self(f(z));
            if (fx > fz + tol.abs) {
                v.holds = false;
                v.witness = {x, z};
                v.margin = fx - fz;
                return v;
            }
        }
    }
    return v;
}

namespace {

int effective_window(const SolveOptions& opts, std::size_t prefix_len) {
    return opts.window > 0 ? opts.window : default_window(prefix_len);
}

std::vector<std::pair<Point, Point>> orbit_pairs(const std::vector<Point>& pts) {
    std::vector<std::pair<Point, Point>> pairs;
    const std::size_t cap = std::min<std::size_t>(pts.size(), 40);
    for (std::size_t i = 0; i < cap; ++i)
        for (std::size_t j = i + 1; j < cap; ++j)
            pairs.emplace_back(pts[i], pts[j]);
    return pairs;
}

struct CandidateChecks {
    double self_residual;
    double image_residual;
    bool limit_ok;
    bool point_ok;
};

CandidateChecks candidate_checks(const MapSpec& f, const Point& a,
                                 const std::vector<Point>& orbit,
                                 const DistanceEvaluator& eval,
                                 const SolveOptions& opts, int window) {
    const Point fa = apply_map(f, a, -1);
    CandidateChecks c{};
    // the two separation-closing equalities: V(<a>^{n-1}, f(a)) = V(<a>^n)
    // and V(<f(a)>^{n-1}, a) = V(<f(a)>^n); they agree at arity 2
    c.self_residual = std::abs(eval.value_pow(a, fa) - eval.self(a));
    c.image_residual = std::abs(eval.value_pow(fa, a) - eval.self(fa));
    c.limit_ok = check_limit(eval, orbit, fa, opts.tol, window);
    c.point_ok = points_equal(a, fa, opts.point_tol);
    return c;
}

// Route closure: the partial separation axiom needs both equalities plus the
// limit evidence; the strong one closes from either.
void apply_route_checks(SolveResult& res, const std::string& prefix,
                        const CandidateChecks& c, const SolveOptions& opts) {
    const bool self_ok = c.self_residual <= opts.tol.abs;
    const bool image_ok = c.image_residual <= opts.tol.abs;
    res.residuals[prefix + "self_residual"] = c.self_residual;
    res.residuals[prefix + "image_residual"] = c.image_residual;
    if (opts.route == Route::partial) {
        res.checks[prefix + "self_residual"] = self_ok;
        res.checks[prefix + "image_residual"] = image_ok;
        res.checks[prefix + "weak_orbital_limit"] = c.limit_ok;
    } else {
        res.checks[prefix + "separation_residual"] =
            self_ok || (image_ok && c.limit_ok);
    }
    res.checks[prefix + "point_equality"] = c.point_ok;
}

void finalize(SolveResult& res, SolveStatus success) {
    if (res.all_checks_pass()) {
        res.status = success;
    } else {
        res.status = SolveStatus::no_certificate;
        for (const auto& [name, ok] : res.checks)
            if (!ok) {
                res.reason = "check failed: " + name;
                break;
            }
    }
}

} // namespace

SolveResult find_fixed_point(const MapSpec& f, const Point& x0,
                             const DistanceEvaluator& eval,
                             const SolveOptions& opts) {
    SolveResult res;
    OrbitTrace trace = iterate_orbit(f, x0, opts.max_iter, eval, opts.tol, opts.window);
    res.iterations = trace.iterations;
    res.residuals["central_distance"] = trace.verdict.central_distance;
    res.checks["orbit_cauchy"] = trace.verdict.is_cauchy;
    if (!trace.verdict.is_cauchy) {
        res.reason = "orbit is not Cauchy within the tolerance";
        res.points.push_back(trace.points.back());
        return res;
    }

    const Point a = snap_point(trace.points.back(), opts.point_tol);
    res.points.push_back(a);
    const int window = effective_window(opts, trace.points.size());

    if (opts.route == Route::partial) {
        auto pairs = orbit_pairs(trace.points);
        pairs.emplace_back(a, apply_map(f, a, -1));
        res.checks["non_expansive_sampled"] =
            check_nonexpansive(f, eval, pairs, opts.tol).holds;
    }
    const auto cc = candidate_checks(f, a, trace.points, eval, opts, window);
    apply_route_checks(res, "", cc, opts);
    finalize(res, SolveStatus::fixed_point);
    return res;
}

SolveResult find_common_fixed_point(const MapSpec& f, const MapSpec& g,
                                    const Point& x0, const Point& y0,
                                    const DistanceEvaluator& eval,
                                    const SolveOptions& opts) {
    SolveResult res;
    OrbitTrace fx = iterate_orbit(f, x0, opts.max_iter, eval, opts.tol, opts.window);
    OrbitTrace gy = iterate_orbit(g, y0, opts.max_iter, eval, opts.tol, opts.window);
    // A stabilized orbit is constant from its last point on.
    while (fx.points.size() < gy.points.size())
        fx.points.push_back(fx.points.back());
    while (gy.points.size() < fx.points.size())
        gy.points.push_back(gy.points.back());
    res.iterations = std::max(fx.iterations, gy.iterations);

    const int window = effective_window(opts, fx.points.size());
    const auto pair = check_cauchy_pair(eval, fx.points, gy.points, opts.tol, window);
    res.residuals["central_distance"] = pair.central_distance;
    res.checks["pair_cauchy"] = pair.is_cauchy;
    if (!pair.is_cauchy) {
        res.reason = "orbits do not form a Cauchy pair within the tolerance";
        res.points.push_back(fx.points.back());
        return res;
    }

    const Point a = snap_point(fx.points.back(), opts.point_tol);
    res.points.push_back(a);
    const auto cf = candidate_checks(f, a, fx.points, eval, opts, window);
    const auto cg = candidate_checks(g, a, gy.points, eval, opts, window);
    apply_route_checks(res, "f_", cf, opts);
    apply_route_checks(res, "g_", cg, opts);
    finalize(res, SolveStatus::common_fixed_point);
    return res;
}

SolveResult find_coincidence_point(const MapSpec& f, const MapSpec& g,
                                   const MapSpec& selector,
                                   const DistanceEvaluator& eval_domain,
                                   const DistanceEvaluator& eval_codomain,
                                   const Point& x1, const ContractionSpec& spec,
                                   const SolveOptions& opts) {
    if (!(spec.c > 0 && spec.c < 1))
        throw std::invalid_argument("find_coincidence_point: c must lie in (0,1)");
    if (spec.A < 0)
        throw std::invalid_argument("find_coincidence_point: A must be >= 0");

    SolveResult res;
    res.assumed.push_back("sequential_continuity");

    std::vector<Point> xs{x1};
    bool stabilized = false;
    for (int i = 0; i < opts.max_iter && !stabilized; ++i) {
        Point z = apply_map(selector, xs.back(), i);
        stabilized = z == xs.back();
        xs.push_back(std::move(z));
        res.iterations = i + 1;
    }
    if (stabilized)
        while (xs.size() <
               std::max<std::size_t>(5, (std::size_t)std::max(opts.window, 0)) + 1)
            xs.push_back(xs.back());

    // Codomain gaps along the run.
    auto gap_f = [&](const Point& x) {
        const Point fx = apply_map(f, x, -1), gx = apply_map(g, x, -1);
        return eval_codomain.value_pow(fx, gx) - eval_codomain.self(fx);
    };
    auto gap_g = [&](const Point& x) {
        const Point fx = apply_map(f, x, -1), gx = apply_map(g, x, -1);
        return eval_codomain.value_pow(fx, gx) - eval_codomain.self(gx);
    };
    std::vector<double> tf, tg;
    for (const auto& x : xs) {
        tf.push_back(gap_f(x));
        tg.push_back(gap_g(x));
    }

    const int window = effective_window(opts, xs.size());
    const auto domain_verdict = classify_cauchy(eval_domain, xs, opts.tol, window);
    const double r = spec.r_supplied ? spec.r : domain_verdict.central_distance;
    if (!spec.r_supplied)
        res.assumed.push_back("r_estimated_from_run");
    res.residuals["r_used"] = r;
    res.residuals["central_distance"] = domain_verdict.central_distance;

    auto contraction_ok = [&](const std::vector<double>& t, int& first_bad,
                              double& margin) {
        for (std::size_t i = 0; i + 1 < t.size(); ++i)
            if (t[i + 1] > spec.c * t[i] + opts.tol.abs) {
                first_bad = static_cast<int>(i + 1);
                margin = t[i + 1] - spec.c * t[i];
                return false;
            }
        return true;
    };
    auto bracket_ok = [&](const std::vector<double>& t) {
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            const double self_z = eval_domain.self(xs[i + 1]);
            const double step = eval_domain.value_pow(xs[i + 1], xs[i]);
            if (self_z < r - opts.tol.abs || step < self_z - opts.tol.abs ||
                step > r + spec.A * t[i] + opts.tol.abs)
                return false;
        }
        return true;
    };

    int bad_i = -1;
    double bad_margin = 0;
    res.checks["mutual_contraction_f"] = contraction_ok(tf, bad_i, bad_margin);
    if (bad_i >= 0)
        res.residuals["first_violation_index"] = bad_i;
    res.checks["selector_bracket_f"] = bracket_ok(tf);
    if (opts.route == Route::partial) {
        int bad_g = -1;
        double mg = 0;
        res.checks["mutual_contraction_g"] = contraction_ok(tg, bad_g, mg);
        res.checks["selector_bracket_g"] = bracket_ok(tg);
    }
    res.checks["domain_cauchy"] = domain_verdict.is_cauchy;

    // Consistency evidence on the run.
    std::vector<std::pair<Point, Point>> pairs = orbit_pairs(xs);
    res.checks["consistent_g_sampled"] =
        check_consistent(g, eval_domain, eval_codomain, pairs, opts.tol).holds;

    const Point a = snap_point(xs.back(), opts.point_tol);
    res.points.push_back(a);
    const Point fa = apply_map(f, a, -1), ga = apply_map(g, a, -1);

    // Sequential continuity itself is not decidable from a prefix; the
    // checkable consequence is that the images of the candidate are limits
    // of the image sequences.
    std::vector<Point> f_images, g_images;
    for (const auto& x : xs) {
        f_images.push_back(apply_map(f, x, -1));
        g_images.push_back(apply_map(g, x, -1));
    }
    res.checks["sequential_limit_f"] =
        check_limit(eval_codomain, f_images, fa, opts.tol, window);
    res.checks["sequential_limit_g"] =
        check_limit(eval_codomain, g_images, ga, opts.tol, window);
    const double gap = eval_codomain.value_pow(fa, ga) -
                       std::min(eval_codomain.self(fa), eval_codomain.self(ga));
    res.residuals["codomain_gap"] = gap;
    res.checks["codomain_gap"] = gap <= opts.tol.abs;

    if (res.all_checks_pass()) {
        res.status = SolveStatus::coincidence_point;
    } else {
        res.status = SolveStatus::no_certificate;
        for (const auto& [name, ok] : res.checks)
            if (!ok) {
                res.reason = "check failed: " + name;
                if (name == "mutual_contraction_f" && bad_i >= 0)
                    res.reason += " at iterate " + std::to_string(bad_i);
                break;
            }
    }
    return res;
}

} // namespace gmetric
