#pragma once

#include <cstdint>
#include <vector>

#include "modelavg/distributions.hpp"
#include "modelavg/montecarlo.hpp"
#include "modelavg/theory.hpp"

namespace modelavg {

/// A focal agent and the other agents of a federation. The helpers are
/// coarse-grained into one helper whose estimate is the sample-count weighted
/// mean of theirs, i.e. the mean of their pooled samples.
class FederationScenario {
 public:
  FederationScenario(SampleSource focal, std::vector<SampleSource> helpers);

  [[nodiscard]] const SampleSource& focal() const { return focal_; }
  [[nodiscard]] const std::vector<SampleSource>& helpers() const { return helpers_; }

  /// The same federation as a simulation input.
  [[nodiscard]] RealizedScenario realized() const { return {focal_, helpers_}; }

 private:
  SampleSource focal_;
  std::vector<SampleSource> helpers_;
};

/// Two-agent scenario with mu_y = sum n_i mu_i / N, n_y = N and
/// var_y = sum n_i var_i / N, so that var_y / n_y = Var[Ybar].
/// Helpers are summed in a canonical order, making the result independent of
/// their listed order.
Scenario reduce_to_two_agent(const FederationScenario& f);

struct PersonalizedWeight {
  double alpha_star;
  ErrorProfile profile;
};

PersonalizedWeight personalized_weight(const FederationScenario& f);

struct PooledMeanEstimate {
  double mean = 0.0;
  double mean_se = 0.0;
  double variance = 0.0;
  double variance_se = 0.0;
  std::uint64_t trials = 0;
};

/// Simulates the pooled helper mean Ybar over `trials` independent rounds.
PooledMeanEstimate simulate_pooled_mean(const FederationScenario& f, std::uint64_t trials,
                                        SeedSpec seed, unsigned workers = 0);

}  // namespace modelavg
