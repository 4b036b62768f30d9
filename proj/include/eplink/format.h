#pragma once

#include <string>

namespace eplink {

/// Locale-independent shortest-of-%g rendering with `digits` significant
/// digits ("inf"/"nan" for non-finite values).
std::string format_double(double x, int digits = 12);

}  // namespace eplink
