#pragma once

#include <string>

#include "patdual/rat.hpp"

namespace patdual {

/// Fixed-point rendering of x with `digits` fractional digits, rounded half
/// to even.
std::string format_decimal(const Rat& x, int digits);

/// x as a percentage with digits - 2 fractional digits ("0.87323..." with
/// digits = 4 gives "87.32%"), i.e. the same rounding as format_decimal(x, digits).
std::string format_percent(const Rat& x, int digits);

/// sqrt(x) for x >= 0, exactly rounded half to even (a tie needs a rational
/// square root, which is detected exactly). negative = true prefixes a minus.
std::string format_sqrt(const Rat& x, int digits, bool negative = false);

}  // namespace patdual
