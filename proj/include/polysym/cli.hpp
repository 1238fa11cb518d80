#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "polysym/series.hpp"

namespace polysym::cli {

// Runs one command line (without the program name). Returns the exit code:
// 0 on success, 1 when a verification check fails, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Series as CSV: one column per variable of its spec, then the coefficient.
std::string series_csv(const Series& s);

}  // namespace polysym::cli
