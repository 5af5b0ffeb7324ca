#include <doctest.h>

#include <random>

#include "gmetric/axioms.hpp"
#include "gmetric/catalog.hpp"
#include "gmetric/derive.hpp"
#include "gmetric/topology.hpp"
#include "test_support.hpp"

using namespace gmetric;
using namespace gmetric::testing;

namespace {

bool contains(const std::vector<std::uint32_t>& sets, std::uint32_t mask) {
    return std::find(sets.begin(), sets.end(), mask) != sets.end();
}

} // namespace

TEST_CASE("balls follow the centered-distance inequality") {
    const FiniteSpace aug =
        build_space({CatalogName::augmented_real_line, {0, 0.3, 1}});
    const auto open = ball(aug, "@a", 0.5, false);
    CHECK(subset_labels(aug, open) ==
          std::vector<std::string>{"@a", "0", "0.3"});
    // a huge radius swallows everything
    CHECK(ball(aug, "@a", 100, false) == (1u << aug.size()) - 1);
    CHECK_THROWS(ball(aug, "nope", 1, false));
    CHECK_THROWS(ball(aug, "@a", 0, false));

    const FiniteSpace pos =
        build_space({CatalogName::positive_real_strong, {1, 0.4, 2}});
    const auto around_one = ball(pos, "1", 0.5, false);
    CHECK(subset_labels(pos, around_one) == std::vector<std::string>{"1", "0.4"});

    // gilded includes the boundary (exact integer table)
    const FiniteSpace basic = build_space({CatalogName::basic_partial});
    const auto strict = ball(basic, "x", 1.0, false);
    const auto gilded = ball(basic, "x", 1.0, true);
    CHECK((strict >> basic.require_index("y") & 1u) == 0);
    CHECK((gilded >> basic.require_index("y") & 1u) == 1);
}

TEST_CASE("a two-point metric space generates the discrete topology") {
    const FiniteSpace d({"x", "y"}, MetricKind(Family::Metric, 2), {0, 1, 0});
    const auto rep = generate_topology(d);
    CHECK(rep.open_sets == std::vector<std::uint32_t>{0b00, 0b01, 0b10, 0b11});
    CHECK(rep.t0);
    CHECK(rep.t1);
    CHECK(rep.t2);
}

TEST_CASE("the augmented two-point sample is T0 but not T1") {
    const FiniteSpace aug = build_space({CatalogName::augmented_real_line, {0}});
    const auto rep = generate_topology(aug);
    // elements are [@a, 0]; opens are {}, {0}, {@a, 0}
    CHECK(rep.open_sets == std::vector<std::uint32_t>{0b00, 0b10, 0b11});
    CHECK(rep.t0);
    CHECK_FALSE(rep.t1);
    REQUIRE(rep.t1_witnesses.size() == 1);
    CHECK(rep.t1_witnesses.front() == std::pair<std::string, std::string>{"@a", "0"});
}

TEST_CASE("strong partial samples are T1 but need not be T2") {
    const FiniteSpace pos =
        build_space({CatalogName::positive_real_strong, {1, 2, 3}});
    const auto rep = generate_topology(pos);
    CHECK(rep.t1);
}

TEST_CASE("closures from the open-set family") {
    const FiniteSpace aug = build_space({CatalogName::augmented_real_line, {0}});
    // the only open set containing the sentinel is everything, which meets {0}
    CHECK(closure_of(aug, subset_from_labels(aug, {"0"})) ==
          subset_from_labels(aug, {"@a", "0"}));
    // a closed singleton stays put
    const FiniteSpace d({"x", "y"}, MetricKind(Family::Metric, 2), {0, 1, 0});
    CHECK(closure_of(d, 0b01) == 0b01);
    // the full set is closed
    const FiniteSpace pos =
        build_space({CatalogName::positive_real_strong, {0.4, 1, 2}});
    const std::uint32_t all = (1u << pos.size()) - 1;
    CHECK(closure_of(pos, all) == all);
    // on a finite sample of the positive line every singleton is open, so the
    // gilded ball around 1 of radius 0.5 ({0.4, 1}) is already closed
    const auto gb = ball(pos, "1", 0.5, true);
    CHECK(subset_labels(pos, gb) == std::vector<std::string>{"0.4", "1"});
    CHECK(closure_of(pos, gb) == gb);
}

TEST_CASE("arity-n spaces generate the same topology as their induced metric") {
    const FiniteSpace unit = build_space({CatalogName::unit_n, {}, 3, 3});
    CHECK(topologies_coincide(unit, induce_metric(unit)));
    CHECK(topologies_coincide(unit, unit));

    const FiniteSpace aug = build_space({CatalogName::augmented_real_line, {0}});
    CHECK_FALSE(topologies_coincide(aug, induce_metric(aug)));

    const FiniteSpace other({"p", "q"}, MetricKind(Family::Metric, 2), {0, 1, 0});
    CHECK_THROWS(topologies_coincide(aug, other));
}

TEST_CASE("random arity-3 tables agree with their induced metrics") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const FiniteSpace m3 = random_n_metric(2 + trial % 4, 3, rng);
        REQUIRE(check_axioms(m3).overall);
        CHECK(topologies_coincide(m3, induce_metric(m3)));
    }
}

TEST_CASE("separation levels across the catalog") {
    // partial kinds: at least T0
    for (const FiniteSpace& s :
         {build_space({CatalogName::basic_partial}),
          build_space({CatalogName::max_partial, {-1, 0, 2}}),
          build_space({CatalogName::augmented_real_line, {-0.5, 0, 1}}),
          build_space({CatalogName::discrete_pm11, {}, 3, 4}),
          build_space({CatalogName::max_partial_n, {0, 1, 2}, 3})}) {
        const auto rep = generate_topology(s);
        CHECK(rep.t0);
    }
    // strong partial kinds: T1
    for (const FiniteSpace& s :
         {build_space({CatalogName::positive_real_strong, {0.4, 1, 2, 5}}),
          shift_by_constant(build_space({CatalogName::unit_n, {}, 3, 4}), -2)}) {
        const auto rep = generate_topology(s);
        CHECK(rep.t1);
    }
    // metrics: T2
    std::mt19937 rng(32);
    for (int trial = 0; trial < 5; ++trial) {
        const auto rep = generate_topology(random_metric(4, rng));
        CHECK(rep.t2);
    }
}

TEST_CASE("the partial topology is never finer than the induced metric topology") {
    std::mt19937 rng(33);
    std::vector<FiniteSpace> samples{
        build_space({CatalogName::basic_partial}),
        build_space({CatalogName::max_partial, {-1, 0.5, 2}}),
        build_space({CatalogName::augmented_real_line, {0, 1}}),
        build_space({CatalogName::positive_real_strong, {0.4, 1, 2}}),
        build_space({CatalogName::discrete_pm11, {}, 3, 4}),
    };
    for (int trial = 0; trial < 5; ++trial)
        samples.push_back(random_partial_metric(4, rng));
    for (const auto& s : samples) {
        const auto partial_rep = generate_topology(s);
        const auto metric_rep = generate_topology(induce_metric(s));
        for (std::uint32_t open : partial_rep.open_sets)
            CHECK(contains(metric_rep.open_sets, open));
    }
}

TEST_CASE("the element cap is enforced") {
    const FiniteSpace big = sample_real_space(CatalogName::max_partial, 0, 1, 21);
    CHECK_THROWS(generate_topology(big));
}
