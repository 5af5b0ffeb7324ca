#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gmetric {

// Command-line driver. Exit codes: 0 for verified/pass outcomes, 1 for
// negative verdicts (axiom failure, invalid scheme, non-Cauchy,
// no_certificate), 2 for usage or input errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace gmetric
