#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "modelavg/core.hpp"
#include "modelavg/distributions.hpp"
#include "modelavg/theory.hpp"

namespace modelavg {

inline constexpr std::uint64_t kDefaultTrials = 100000;
inline constexpr double kDefaultK = 4.0;
inline constexpr std::uint64_t kMinTrials = 100;

/// Simulated ESE. std_error is the sample standard deviation of the
/// per-trial squared errors divided by sqrt(trials).
struct MonteCarloEstimate {
  double mean_sq_error = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  SeedSpec seed;

  friend bool operator==(const MonteCarloEstimate&, const MonteCarloEstimate&) = default;
};

/// Local source X plus the helper's sources. A single helper is the usual
/// two-agent case; several helpers are pooled into one sample-count weighted
/// mean (each helper contributes its raw samples).
struct RealizedScenario {
  SampleSource x;
  std::vector<SampleSource> helpers;

  [[nodiscard]] std::uint64_t helper_sample_count() const;
};

/// Everything measured about mu_bar_alpha = (1 - alpha) Xbar + alpha Ybar at one alpha.
struct EstimatorSummary {
  double alpha = 0.0;
  double mean = 0.0;         ///< MC mean of the estimator
  double mean_se = 0.0;
  double variance = 0.0;     ///< unbiased MC variance of the estimator
  double variance_se = 0.0;  ///< sqrt((m4 - s^4) / trials)
  MonteCarloEstimate ese;    ///< squared error against mean(X)
};

/// Per-trial simulation, common random numbers across `alphas`. Trial t
/// draws X then each helper in order from make_engine(seed, t). Results do
/// not depend on `workers` (0 selects the hardware concurrency).
std::vector<EstimatorSummary> simulate_estimator(const RealizedScenario& s,
                                                 std::span<const double> alphas,
                                                 std::uint64_t trials, SeedSpec seed,
                                                 unsigned workers = 0);

MonteCarloEstimate estimate_ese(const DistributionSpec& x, std::uint64_t n_x,
                                const DistributionSpec& y, SampleSize n_y, double alpha,
                                std::uint64_t trials, SeedSpec seed, unsigned workers = 0);

std::vector<MonteCarloEstimate> estimate_error_curve(const DistributionSpec& x, std::uint64_t n_x,
                                                     const DistributionSpec& y, SampleSize n_y,
                                                     std::span<const double> alphas,
                                                     std::uint64_t trials, SeedSpec seed,
                                                     unsigned workers = 0);

std::vector<MonteCarloEstimate> estimate_error_curve(const RealizedScenario& s,
                                                     std::span<const double> alphas,
                                                     std::uint64_t trials, SeedSpec seed,
                                                     unsigned workers = 0);

/// The fixed 21-point grid {0, 0.05, ..., 1}.
std::vector<double> validation_grid();

struct ValidationPoint {
  double alpha = 0.0;
  MonteCarloEstimate mc;
  double closed_form = 0.0;
  double abs_diff = 0.0;
  double tolerance = 0.0;  ///< k * std_error plus a rounding floor
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationPoint> points;
  double k = kDefaultK;
  bool pass = false;
};

/// Compares simulated ESE against `closed_form` on validation_grid().
ValidationReport validate_scenario(const RealizedScenario& s, const ErrorProfile& closed_form,
                                   std::uint64_t trials, SeedSpec seed, double k = kDefaultK,
                                   unsigned workers = 0);

/// Single-helper convenience: the closed form comes from the specs' moments.
ValidationReport validate_scenario(const RealizedScenario& s, std::uint64_t trials, SeedSpec seed,
                                   double k = kDefaultK, unsigned workers = 0);

}  // namespace modelavg
