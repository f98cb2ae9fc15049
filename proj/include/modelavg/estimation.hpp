#pragma once

#include <span>
#include <string>
#include <vector>

namespace modelavg {

/// Realized samples from one source (X, Y, or a helper agent). Never empty.
class SampleSet {
 public:
  SampleSet(std::vector<double> values, std::string source);

  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] const std::string& source() const { return source_; }

 private:
  std::vector<double> values_;
  std::string source_;
};

/// Arithmetic mean. Throws PreconditionError on empty input.
double empirical_mean(std::span<const double> values);
double empirical_mean(const SampleSet& s);

/// (1 - alpha) * local + alpha * helper. Throws DomainError unless alpha is in [0, 1].
double weighted_average(double local, double helper, double alpha);

/// Shrinks `local` toward a constant anchor; weighted_average with a constant helper.
double shrink(double local, double anchor, double alpha);

double squared_error(double estimate, double target);

}  // namespace modelavg
