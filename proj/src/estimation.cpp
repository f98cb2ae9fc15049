#include "modelavg/estimation.hpp"

#include <cmath>
#include <numeric>

#include "modelavg/core.hpp"

namespace modelavg {

SampleSet::SampleSet(std::vector<double> values, std::string source)
    : values_(std::move(values)), source_(std::move(source)) {
  if (values_.empty()) throw PreconditionError("SampleSet '" + source_ + "' is empty");
}

double empirical_mean(std::span<const double> values) {
  if (values.empty()) throw PreconditionError("empirical_mean of an empty sample set");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double empirical_mean(const SampleSet& s) { return empirical_mean(s.values()); }

double weighted_average(double local, double helper, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("weighted_average: alpha outside [0, 1]");
  // Endpoints are returned exactly; (1-a)*l + a*h can be off by an ulp.
  if (alpha == 0.0) return local;
  if (alpha == 1.0) return helper;
  return (1.0 - alpha) * local + alpha * helper;
}

double shrink(double local, double anchor, double alpha) {
  return weighted_average(local, anchor, alpha);
}

double squared_error(double estimate, double target) {
  const double d = estimate - target;
  return d * d;
}

}  // namespace modelavg
