#pragma once

#include <string>

namespace ocsplit {

/// Shortest decimal form that parses back to exactly the same double.
/// Used for every number we serialize so emitted files diff cleanly.
std::string format_double(double value);

/// Strict double parse; throws std::invalid_argument on trailing garbage.
double parse_double(const std::string& text);

}  // namespace ocsplit
