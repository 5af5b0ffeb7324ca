#include "gmetric/topology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gmetric {

namespace {

double centered_distance(const FiniteSpace& s, int center, int y) {
    return s.value_pow(center, y) - s.self(center);
}

std::uint32_t ball_mask(const FiniteSpace& s, int center, double eps, bool gilded) {
    std::uint32_t mask = 0;
    for (int y = 0; y < s.size(); ++y) {
        const double cd = centered_distance(s, center, y);
        if (gilded ? cd <= eps : cd < eps)
            mask |= (1u << y);
    }
    return mask;
}

// The distinct balls of one center: only the radii between consecutive
// distinct centered distances matter, plus one beyond the maximum. A radius
// must be positive to name a ball.
void collect_balls(const FiniteSpace& s, int center, std::set<std::uint32_t>& out) {
    std::set<double> values;
    for (int y = 0; y < s.size(); ++y)
        values.insert(centered_distance(s, center, y));
    std::vector<double> u(values.begin(), values.end());
    for (std::size_t i = 0; i < u.size(); ++i) {
        double eps;
        if (i + 1 < u.size()) {
            if (!(u[i + 1] > 0))
                continue; // threshold below every positive radius
            eps = (std::max(u[i], 0.0) + u[i + 1]) / 2;
        } else {
            eps = u[i] + 1;
            if (!(eps > 0))
                eps = 1;
        }
        out.insert(ball_mask(s, center, eps, /*gilded=*/false));
    }
}

} // namespace

std::uint32_t ball(const FiniteSpace& space, const std::string& center, double eps,
                   bool gilded) {
    if (!(eps > 0))
        throw std::invalid_argument("ball: eps must be positive");
    return ball_mask(space, space.require_index(center), eps, gilded);
}

TopologyReport generate_topology(const FiniteSpace& space) {
    const int m = space.size();
    if (m > kTopologyElementCap)
        throw std::invalid_argument("generate_topology: element count above cap");

    std::set<std::uint32_t> opens;
    opens.insert(0u);
    for (int x = 0; x < m; ++x)
        collect_balls(space, x, opens);

    // Fixed-point closure under union and pairwise intersection.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint32_t> snapshot(opens.begin(), opens.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                if (opens.insert(snapshot[i] | snapshot[j]).second)
                    grew = true;
                if (opens.insert(snapshot[i] & snapshot[j]).second)
                    grew = true;
            }
    }

    TopologyReport rep;
    rep.open_sets.assign(opens.begin(), opens.end());

    auto separates = [&](int x, int y) {
        for (std::uint32_t o : rep.open_sets)
            if ((o >> x & 1u) && !(o >> y & 1u))
                return true;
        return false;
    };

    rep.t0 = rep.t1 = rep.t2 = true;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) {
            const bool xy = separates(x, y), yx = separates(y, x);
            if (!xy && !yx) {
                rep.t0 = false;
                rep.t0_witnesses.emplace_back(space.label(x), space.label(y));
            }
            if (!xy || !yx) {
                rep.t1 = false;
                rep.t1_witnesses.emplace_back(space.label(x), space.label(y));
            }
            bool disjoint = false;
            for (std::uint32_t u : rep.open_sets) {
                if (!(u >> x & 1u))
                    continue;
                for (std::uint32_t v : rep.open_sets)
                    if ((v >> y & 1u) && (u & v) == 0) {
                        disjoint = true;
                        break;
                    }
                if (disjoint)
                    break;
            }
            if (!disjoint) {
                rep.t2 = false;
                rep.t2_witnesses.emplace_back(space.label(x), space.label(y));
            }
        }
    return rep;
}

std::uint32_t closure_of(const FiniteSpace& space, std::uint32_t subset) {
    const auto rep = generate_topology(space);
    std::uint32_t closure = 0;
    for (int x = 0; x < space.size(); ++x) {
        bool in_closure = true;
        for (std::uint32_t o : rep.open_sets)
            if ((o >> x & 1u) && (o & subset) == 0) {
                in_closure = false;
                break;
            }
        if (in_closure)
            closure |= (1u << x);
    }
    return closure;
}

bool topologies_coincide(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.elements() != b.elements())
        throw std::invalid_argument("topologies_coincide: element lists differ");
    return generate_topology(a).open_sets == generate_topology(b).open_sets;
}

std::vector<std::string> subset_labels(const FiniteSpace& space, std::uint32_t mask) {
    std::vector<std::string> out;
    for (int i = 0; i < space.size(); ++i)
        if (mask >> i & 1u)
            out.push_back(space.label(i));
    return out;
}

std::uint32_t subset_from_labels(const FiniteSpace& space,
                                 const std::vector<std::string>& labels) {
    std::uint32_t mask = 0;
    for (const auto& l : labels)
        mask |= (1u << space.require_index(l));
    return mask;
}

} // namespace gmetric
