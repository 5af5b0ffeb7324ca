#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmetric/space.hpp"

namespace gmetric {

// Element subsets are bitmasks over the element indices; the cap below keeps
// the closure desk-scale (worst case 2^m open sets).
inline constexpr int kTopologyElementCap = 20;

struct TopologyReport {
    std::vector<std::uint32_t> open_sets; // ascending bitmask order
    bool t0 = false;
    bool t1 = false;
    bool t2 = false;
    std::vector<std::pair<std::string, std::string>> t0_witnesses;
    std::vector<std::pair<std::string, std::string>> t1_witnesses;
    std::vector<std::pair<std::string, std::string>> t2_witnesses;
};

// Members y with V(<x>^{n-1},y) - V(<x>^n) < eps (open) or <= eps (gilded).
std::uint32_t ball(const FiniteSpace& space, const std::string& center, double eps,
                   bool gilded);

// All distinct open balls (finitely many radii matter), closed under union
// and pairwise intersection, plus the empty set; separation verdicts follow
// the T0/T1/T2 definitions evaluated over that family.
TopologyReport generate_topology(const FiniteSpace& space);

// {x | every open set containing x meets the subset}.
std::uint32_t closure_of(const FiniteSpace& space, std::uint32_t subset);

// True iff both spaces generate identical open-set families. Requires equal
// element lists.
bool topologies_coincide(const FiniteSpace& a, const FiniteSpace& b);

std::vector<std::string> subset_labels(const FiniteSpace& space, std::uint32_t mask);
std::uint32_t subset_from_labels(const FiniteSpace& space,
                                 const std::vector<std::string>& labels);

} // namespace gmetric
