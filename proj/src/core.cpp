#include "modelavg/core.hpp"

#include <cmath>

#include "modelavg/format.hpp"

namespace modelavg {

Extended::Extended(double finite) : value_(finite) {
  if (!std::isfinite(finite)) {
    throw DomainError("Extended: finite value required, use Extended::infinity()");
  }
}

double Extended::value() const {
  if (infinite_) throw DomainError("Extended: value() requested on +infinity");
  return value_;
}

Extended min(const Extended& a, const Extended& b) { return b < a ? b : a; }

Extended ratio_or_infinity(double numerator, double denominator) {
  if (denominator == 0.0) return Extended::infinity();
  return Extended(numerator / denominator);
}

std::string to_string(const Extended& e) {
  return e.is_infinite() ? std::string("inf") : format_shortest(e.value());
}

SampleSize::SampleSize(std::uint64_t n) : n_(n), infinite_(false) {
  if (n == 0) throw PreconditionError("sample size must be positive");
}

std::uint64_t SampleSize::count() const {
  if (infinite_) throw UnsupportedInSimulation("sample size is infinite");
  return n_;
}

std::string to_string(const SampleSize& n) {
  return n.is_infinite() ? std::string("inf") : std::to_string(n.count());
}

}  // namespace modelavg
