#pragma once

#include <string>
#include <vector>

#include "gmetric/fixedpoint.hpp"

namespace gmetric {

struct MapInfo {
    std::string name;
    std::string params;
    std::string description;
};

// Closed-form maps for the solver CLI and tests. p1/p2 feed the
// parameterized ones; the rest ignore them.
MapSpec map_by_name(const std::string& name, double p1 = 0.0, double p2 = 0.0);

std::vector<MapInfo> map_list();

} // namespace gmetric
