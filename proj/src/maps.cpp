#include "gmetric/maps.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmetric/catalog.hpp"

namespace gmetric {

namespace {

double need_real(const Point& p) {
    if (!p.is_real())
        throw std::invalid_argument("map needs a real point, got '" + p.label() + "'");
    return p.real();
}

bool is_sentinel(const Point& p) {
    return !p.is_real() && p.label() == kSentinelLabel;
}

} // namespace

MapSpec map_by_name(const std::string& name, double p1, double p2) {
    if (name == "identity")
        return {"identity", [](const Point& p) { return p; }};
    if (name == "linear")
        return {"linear", [p1](const Point& p) { return Point(p1 * need_real(p)); }};
    if (name == "affine")
        return {"affine",
                [p1, p2](const Point& p) { return Point(p1 * need_real(p) + p2); }};
    if (name == "halving")
        return {"halving", [](const Point& p) { return Point(need_real(p) / 2); }};
    if (name == "one_minus")
        return {"one_minus", [](const Point& p) { return Point(1 - need_real(p)); }};
    if (name == "doubling")
        return {"doubling", [](const Point& p) { return Point(2 * need_real(p)); }};
    if (name == "negate")
        return {"negate", [](const Point& p) { return Point(-need_real(p)); }};
    if (name == "halving_with_jump")
        // x/2 away from 0; the origin jumps to -1
        return {"halving_with_jump", [](const Point& p) {
                    const double x = need_real(p);
                    return x == 0.0 ? Point(-1.0) : Point(x / 2);
                }};
    if (name == "identity_sentinel_to_one")
        // identity on the reals; the sentinel goes to 1
        return {"identity_sentinel_to_one", [](const Point& p) {
                    return is_sentinel(p) ? Point(1.0) : Point(need_real(p));
                }};
    if (name == "halving_zero_to_sentinel")
        // x/2 on the reals, 0 to the sentinel, the sentinel to 5
        return {"halving_zero_to_sentinel", [](const Point& p) {
                    if (is_sentinel(p))
                        return Point(5.0);
                    const double x = need_real(p);
                    return x == 0.0 ? Point(std::string(kSentinelLabel))
                                    : Point(x / 2);
                }};
    throw std::invalid_argument("unknown map: " + name);
}

std::vector<MapInfo> map_list() {
    std::vector<MapInfo> list = {
        {"affine", "p1, p2", "x -> p1*x + p2"},
        {"doubling", "", "x -> 2x"},
        {"halving", "", "x -> x/2"},
        {"halving_with_jump", "", "x -> x/2 for x != 0, 0 -> -1"},
        {"halving_zero_to_sentinel", "", "x -> x/2, 0 -> @a, @a -> 5"},
        {"identity", "", "x -> x"},
        {"identity_sentinel_to_one", "", "x -> x on reals, @a -> 1"},
        {"linear", "p1", "x -> p1*x"},
        {"negate", "", "x -> -x"},
        {"one_minus", "", "x -> 1 - x"},
    };
    std::sort(list.begin(), list.end(),
              [](const MapInfo& a, const MapInfo& b) { return a.name < b.name; });
    return list;
}

} // namespace gmetric
