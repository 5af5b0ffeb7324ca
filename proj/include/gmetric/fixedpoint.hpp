#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gmetric/evaluator.hpp"
#include "gmetric/sequences.hpp"
#include "gmetric/tolerance.hpp"

namespace gmetric {

// A pointwise-evaluable self-map (or map into another carrier) on the point
// universe.
struct MapSpec {
    std::string name;
    std::function<Point(const Point&)> fn;

    Point operator()(const Point& p) const { return fn(p); }
};

struct MapEvalError : std::runtime_error {
    MapEvalError(const std::string& what, int idx)
        : std::runtime_error(what), index(idx) {}
    int index;
};

enum class ContractionMode { orbital_c, orbital_phi, pairwise_c, mutual_c };

struct ContractionSpec {
    ContractionMode mode = ContractionMode::orbital_c;
    double c = 0.5;                   // in (0,1)
    double r = 0.0;                   // target central distance
    bool r_supplied = true;           // false: estimate from the Cauchy verdict
    double A = 0.0;                   // mutual mode, >= 0
    std::function<double(double)> phi; // phi mode: non-decreasing, phi(r) = 0
};

struct InequalityVerdict {
    std::string name;
    bool holds = true;
    int first_violation = -1; // iterate index of the first failure
    double margin = 0.0;      // amount by which the first failure misses
};

struct ContractionVerdict {
    bool holds = true;
    double r_used = 0.0;
    std::vector<InequalityVerdict> inequalities;

    const InequalityVerdict* find(const std::string& name) const;
};

struct OrbitTrace {
    std::vector<Point> points;       // x_0, f(x_0), f^2(x_0), ...
    std::vector<double> step_values; // V(<x_i>^{n-1}, x_{i+1})
    std::vector<double> self_values; // V(<x_i>^n)
    CauchyVerdict verdict;
    int iterations = 0; // map applications performed (early stop on fixpoints)
};

enum class SolveStatus {
    fixed_point,
    common_fixed_point,
    coincidence_point,
    no_certificate,
};

// Which hypothesis set the certificate verifies: the partial route needs
// both residual equalities plus the limit evidence; the strong route closes
// from either one.
enum class Route { partial, strong_partial };

struct SolveOptions {
    int max_iter = 60;
    Tolerance tol{1e-9};
    int window = 0; // 0: default_window of the prefix
    Route route = Route::partial;
    double point_tol = 1e-9; // point-equality tolerance on real carriers
};

struct SolveResult {
    SolveStatus status = SolveStatus::no_certificate;
    std::vector<Point> points; // candidate(s)
    std::map<std::string, double> residuals;
    int iterations = 0;
    std::map<std::string, bool> checks; // hypothesis name -> pass
    std::vector<std::string> assumed;   // hypotheses taken on faith
    std::string reason;                 // set for no_certificate

    bool all_checks_pass() const;
};

const char* status_name(SolveStatus s);

// Reals snapped to the nearest multiple of grid; labels unchanged. The
// certificate evaluates maps at the snapped candidate so that a branch at
// the idealized limit is actually taken.
Point snap_point(const Point& p, double grid);
bool points_equal(const Point& a, const Point& b, double point_tol);

OrbitTrace iterate_orbit(const MapSpec& f, const Point& x0, int max_iter,
                         const DistanceEvaluator& eval, Tolerance tol = Tolerance(),
                         int window = 0);

// Orbital inequality families along the available prefix; modes pairwise_c
// and mutual_c are rejected here.
ContractionVerdict check_orbital_contraction(const OrbitTrace& trace,
                                             const ContractionSpec& spec,
                                             const DistanceEvaluator& eval,
                                             Tolerance tol = Tolerance());

// The f-pairwise inequalities over two orbits of equal length.
ContractionVerdict check_pairwise_contraction(const OrbitTrace& fx,
                                              const OrbitTrace& gy,
                                              const ContractionSpec& spec,
                                              const DistanceEvaluator& eval,
                                              Tolerance tol = Tolerance());

struct SampleVerdict {
    bool holds = true;
    std::optional<std::pair<Point, Point>> witness;
    double margin = 0.0;
};

// V(<f(x)>^{n-1}, f(y)) <= V(<x>^{n-1}, y) on every sampled pair.
SampleVerdict check_nonexpansive(const MapSpec& f, const DistanceEvaluator& eval,
                                 const std::vector<std::pair<Point, Point>>& samples,
                                 Tolerance tol = Tolerance());

// V(<x>^n) <= V(<z>^n) implies H(<f(x)>^n) <= H(<f(z)>^n) on every sampled
// pair.
SampleVerdict check_consistent(const MapSpec& f, const DistanceEvaluator& eval_domain,
                               const DistanceEvaluator& eval_codomain,
                               const std::vector<std::pair<Point, Point>>& samples,
                               Tolerance tol = Tolerance());

SolveResult find_fixed_point(const MapSpec& f, const Point& x0,
                             const DistanceEvaluator& eval, const SolveOptions& opts);

SolveResult find_common_fixed_point(const MapSpec& f, const MapSpec& g,
                                    const Point& x0, const Point& y0,
                                    const DistanceEvaluator& eval,
                                    const SolveOptions& opts);

// Builds x_{i+1} = selector(x_i) from x1 and certifies the mutual
// contraction inequalities with the supplied c, r, A.
SolveResult find_coincidence_point(const MapSpec& f, const MapSpec& g,
                                   const MapSpec& selector,
                                   const DistanceEvaluator& eval_domain,
                                   const DistanceEvaluator& eval_codomain,
                                   const Point& x1, const ContractionSpec& spec,
                                   const SolveOptions& opts);

} // namespace gmetric
