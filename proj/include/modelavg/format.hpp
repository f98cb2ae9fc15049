#pragma once

#include <string>
#include <string_view>

namespace modelavg {

/// Shortest decimal string that parses back to exactly `x`.
std::string format_shortest(double x);

/// Fixed-point with `decimals` digits. Exact binary ties round half to even.
std::string format_fixed(double x, int decimals);

/// round-half-even of x to `decimals` places, returned as a double.
double round_to(double x, int decimals);

/// Strict decimal parse; "inf" / "+inf" give +infinity. Throws
/// PreconditionError on trailing garbage.
double parse_double(std::string_view text);

/// Number of digits after the decimal point in a printed number ("12.8" -> 1).
int decimals_of(std::string_view printed);

}  // namespace modelavg
