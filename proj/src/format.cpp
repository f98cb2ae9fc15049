#include "modelavg/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "modelavg/core.hpp"

namespace modelavg {

std::string format_shortest(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

std::string format_fixed(double x, int decimals) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  std::array<char, 512> buf{};
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::fixed, decimals);
  if (ec != std::errc{}) throw DomainError("format_fixed: value too large");
  std::string s(buf.data(), end);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

double round_to(double x, int decimals) {
  if (!std::isfinite(x)) return x;
  return parse_double(format_fixed(x, decimals));
}

double parse_double(std::string_view text) {
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw PreconditionError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

int decimals_of(std::string_view printed) {
  const auto dot = printed.find('.');
  if (dot == std::string_view::npos) return 0;
  return static_cast<int>(printed.size() - dot - 1);
}

}  // namespace modelavg
