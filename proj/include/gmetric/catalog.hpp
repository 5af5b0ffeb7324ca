#pragma once

#include <string>
#include <vector>

#include "gmetric/space.hpp"

namespace gmetric {

enum class CatalogName {
    basic_partial,
    max_partial,
    augmented_real_line,
    positive_real_strong,
    unit_n,
    five_metric_negative,
    discrete_pm11,
    max_partial_n,
};

// Parameters of a catalog space. points feeds the real-line families;
// arity/count feed the n-ary and discrete families. Unused fields are
// ignored by families that do not need them.
struct CatalogSpec {
    CatalogName name = CatalogName::basic_partial;
    std::vector<double> points; // sample points, duplicate-free
    int arity = 3;
    int count = 3; // element count for unit_n / discrete_pm11
};

struct CatalogInfo {
    std::string name;
    std::string kind;   // kind of the built space ("per arity" families list both)
    std::string params; // human-readable parameter summary
};

// Sentinel label of the augmented real line's extra point (not a real).
inline const char* kSentinelLabel = "@a";

FiniteSpace build_space(const CatalogSpec& spec);

// Equally spaced sample points fed to build_space. positive_real_strong
// needs lo > 0; n-ary families take the arity from `arity`.
FiniteSpace sample_real_space(CatalogName family, double lo, double hi, int count,
                              int arity = 2);

std::vector<CatalogInfo> catalog_list();

CatalogName catalog_name_from_string(const std::string& s);
std::string catalog_name_to_string(CatalogName n);

} // namespace gmetric
