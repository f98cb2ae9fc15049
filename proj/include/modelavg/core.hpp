#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modelavg {

/// Argument outside the mathematical domain of an operation (e.g. alpha > 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller violated a documented precondition (e.g. empty sample set).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The closed form handles it, but it cannot be realized by sampling
/// (an infinite sample count).
class UnsupportedInSimulation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A non-negative quantity that may be +infinity. Infinity is an explicit tag
/// and never leaks into floating point arithmetic; `value()` refuses it.
class Extended {
 public:
  constexpr Extended() = default;
  Extended(double finite);  // NOLINT(google-explicit-constructor)

  static constexpr Extended infinity() { return Extended(Tag{}); }

  [[nodiscard]] constexpr bool is_infinite() const { return infinite_; }
  [[nodiscard]] constexpr bool is_finite() const { return !infinite_; }
  [[nodiscard]] double value() const;

  friend bool operator==(const Extended& a, const Extended& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(double a, const Extended& b) { return b.infinite_ || a < b.value_; }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.infinite_) return false;
    return b.infinite_ || a.value_ < b.value_;
  }

 private:
  struct Tag {};
  explicit constexpr Extended(Tag) : infinite_(true) {}

  double value_ = 0.0;
  bool infinite_ = false;
};

Extended min(const Extended& a, const Extended& b);

/// "x / y" with the division-by-zero-is-infinity convention, for x > 0, y >= 0.
Extended ratio_or_infinity(double numerator, double denominator);

std::string to_string(const Extended& e);

/// A sample count: a positive integer or the distinguished value Infinite.
class SampleSize {
 public:
  explicit SampleSize(std::uint64_t n);
  static SampleSize infinite() { return SampleSize(); }

  [[nodiscard]] bool is_infinite() const { return infinite_; }
  [[nodiscard]] std::uint64_t count() const;

  friend bool operator==(const SampleSize&, const SampleSize&) = default;

 private:
  SampleSize() = default;
  std::uint64_t n_ = 0;
  bool infinite_ = true;
};

std::string to_string(const SampleSize& n);

}  // namespace modelavg
