#pragma once

#include <string>

namespace gmetric {

// Shortest decimal string that parses back to exactly the same double.
// Used for element labels of sampled real-line spaces so labels are
// reproducible across runs.
std::string format_real(double v);

} // namespace gmetric
