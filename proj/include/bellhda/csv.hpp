#pragma once

#include <string>

namespace bellhda {

/// Shortest-round-trip-safe decimal form (17 significant digits).
std::string format_real(double x);

}  // namespace bellhda
