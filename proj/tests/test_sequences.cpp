#include <doctest.h>

#include <cmath>

#include "gmetric/catalog.hpp"
#include "gmetric/sequences.hpp"
#include "gmetric/space.hpp"

using namespace gmetric;

namespace {

std::vector<Point> halving_prefix(int count) {
    std::vector<Point> pts;
    double x = 1.0;
    for (int i = 1; i <= count; ++i) {
        x /= 2;
        pts.push_back(Point(x));
    }
    return pts;
}

const Tolerance kTol(1e-6);
constexpr int kWindow = 10;

} // namespace

TEST_CASE("the halving sequence on the augmented line is Cauchy around -1") {
    const auto eval = evaluator_by_name("augmented_real_line");
    const auto pts = halving_prefix(30);
    const auto v = classify_cauchy(*eval, pts, kTol, kWindow);
    CHECK(v.is_cauchy);
    CHECK(std::abs(v.central_distance - (-1.0)) <= 1e-6);
    CHECK(v.window == kWindow);

    // both orientations give the same estimate at desk scale
    const auto mirrored =
        classify_cauchy(*eval, pts, kTol, kWindow, Orientation::Mirrored);
    CHECK(std::abs(mirrored.central_distance - v.central_distance) <=
          3 * kTol.abs);
}

TEST_CASE("constant prefixes are Cauchy at their self value") {
    const auto eval = evaluator_by_name("positive_real_strong");
    const std::vector<Point> pts(12, Point(0.7));
    const auto v = classify_cauchy(*eval, pts, Tolerance(), 5);
    CHECK(v.is_cauchy);
    CHECK(v.central_distance == doctest::Approx(0.7));
    CHECK(v.max_tail_deviation == 0.0);
}

TEST_CASE("an alternating prefix on the basic two-point table is not Cauchy") {
    const auto eval =
        make_space_evaluator(build_space({CatalogName::basic_partial}));
    std::vector<Point> pts;
    for (int i = 0; i < 12; ++i)
        pts.push_back(Point(std::string(i % 2 ? "y" : "x")));
    const auto v = classify_cauchy(*eval, pts, Tolerance(), 6);
    CHECK_FALSE(v.is_cauchy);
}

TEST_CASE("window validation") {
    const auto eval = evaluator_by_name("abs_metric");
    const auto pts = halving_prefix(6);
    CHECK_THROWS(classify_cauchy(*eval, pts, Tolerance(), 7));
    CHECK_THROWS(classify_cauchy(*eval, pts, Tolerance(), 1));
    CHECK(default_window(30) == 10);
    CHECK(default_window(6) == 5);
    CHECK(default_window(3) == 3);
}

TEST_CASE("limits of the halving sequence") {
    const auto eval = evaluator_by_name("augmented_real_line");
    const auto pts = halving_prefix(30);
    CHECK(check_limit(*eval, pts, Point(0.0), kTol, kWindow));
    CHECK(check_limit(*eval, pts, Point(std::string("@a")), kTol, kWindow));
    CHECK_FALSE(check_limit(*eval, pts, Point(5.0), kTol, kWindow));
}

TEST_CASE("only the origin is the special limit of the halving sequence") {
    const auto eval = evaluator_by_name("augmented_real_line");
    const auto pts = halving_prefix(30);
    CHECK(check_special_limit(*eval, pts, Point(0.0), kTol, kWindow));
    CHECK_FALSE(check_special_limit(*eval, pts, Point(std::string("@a")), kTol,
                                    kWindow));
}

TEST_CASE("a constant prefix has its own point as special limit") {
    const auto eval = evaluator_by_name("max_partial");
    const std::vector<Point> pts(10, Point(0.3));
    CHECK(check_special_limit(*eval, pts, Point(0.3), Tolerance(), 5));
}

TEST_CASE("special limits require a Cauchy prefix") {
    const auto eval = evaluator_by_name("abs_metric");
    std::vector<Point> pts;
    for (int i = 0; i < 10; ++i)
        pts.push_back(Point(i % 2 ? 1.0 : 0.0));
    CHECK_THROWS(check_special_limit(*eval, pts, Point(0.0), Tolerance(), 5));
}

TEST_CASE("special limits are unique across candidate sets") {
    const auto aug = evaluator_by_name("augmented_real_line");
    const auto pts = halving_prefix(30);
    int passing = 0;
    for (const Point& cand : {Point(0.0), Point(std::string("@a")), Point(0.5),
                              Point(5.0), Point(-1.0)})
        passing += check_special_limit(*aug, pts, cand, kTol, kWindow) ? 1 : 0;
    CHECK(passing == 1);

    const auto mx = evaluator_by_name("max_partial");
    std::vector<Point> geo;
    double x = 1;
    for (int i = 0; i < 40; ++i)
        geo.push_back(Point(x /= 3));
    passing = 0;
    for (const Point& cand : {Point(0.0), Point(1e-3), Point(0.5), Point(1.0)})
        passing += check_special_limit(*mx, geo, cand, kTol, kWindow) ? 1 : 0;
    CHECK(passing == 1);
}

TEST_CASE("a sequence pairs with itself") {
    const auto eval = evaluator_by_name("augmented_real_line");
    const auto pts = halving_prefix(30);
    const auto v = check_cauchy_pair(*eval, pts, pts, kTol, kWindow);
    CHECK(v.is_cauchy);
    CHECK(std::abs(v.central_distance - (-1.0)) <= 1e-6);
}

TEST_CASE("two geometric sequences pair on the maximum carrier") {
    const auto eval = evaluator_by_name("max_partial");
    std::vector<Point> xs, ys;
    double a = 1, b = 1;
    for (int i = 0; i < 40; ++i) {
        xs.push_back(Point(a /= 2));
        ys.push_back(Point(b /= 3));
    }
    const auto v = check_cauchy_pair(*eval, xs, ys, kTol, kWindow);
    CHECK(v.is_cauchy);
    CHECK(std::abs(v.central_distance) <= 1e-6);

    // each member is then Cauchy with the same central distance
    const auto vx = classify_cauchy(*eval, xs, kTol, kWindow);
    const auto vy = classify_cauchy(*eval, ys, kTol, kWindow);
    CHECK(vx.is_cauchy);
    CHECK(vy.is_cauchy);
    CHECK(std::abs(vx.central_distance - v.central_distance) <= 2 * kTol.abs);
    CHECK(std::abs(vy.central_distance - v.central_distance) <= 2 * kTol.abs);
}

TEST_CASE("a vanishing and a stuck sequence do not pair") {
    const auto eval = evaluator_by_name("max_partial");
    std::vector<Point> xs, ys;
    double a = 1;
    for (int i = 0; i < 40; ++i) {
        xs.push_back(Point(a /= 2));
        ys.push_back(Point(1.0));
    }
    const auto v = check_cauchy_pair(*eval, xs, ys, kTol, kWindow);
    CHECK_FALSE(v.is_cauchy);
}

TEST_CASE("pair verdicts require equal lengths") {
    const auto eval = evaluator_by_name("max_partial");
    const auto xs = halving_prefix(10), ys = halving_prefix(9);
    CHECK_THROWS(check_cauchy_pair(*eval, xs, ys, kTol, 5));
}

TEST_CASE("limit verdicts are monotone in the tolerance") {
    const auto eval = evaluator_by_name("augmented_real_line");
    const auto pts = halving_prefix(12);
    for (double base : {1e-9, 1e-6, 1e-3}) {
        const bool tight = check_limit(*eval, pts, Point(0.0), Tolerance(base), 5);
        const bool loose =
            check_limit(*eval, pts, Point(0.0), Tolerance(base * 1000), 5);
        if (tight)
            CHECK(loose);
    }
}

TEST_CASE("finite-space evaluators reject unknown labels") {
    const auto eval =
        make_space_evaluator(build_space({CatalogName::basic_partial}));
    CHECK(eval->arity() == 2);
    CHECK(eval->value_pow(Point(std::string("x")), Point(std::string("y"))) == 1.0);
    CHECK_THROWS(eval->self(Point(std::string("zz"))));
}
