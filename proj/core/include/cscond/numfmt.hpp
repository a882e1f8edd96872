#pragma once

#include <string>

namespace cscond {

/// Shortest decimal string that round-trips to the same double.
/// All file output goes through this so that re-running a scenario
/// produces byte-identical artifacts.
std::string format_double(double value);

/// Parse a double previously written by format_double (or any decimal).
double parse_double(const std::string& text);

}  // namespace cscond
