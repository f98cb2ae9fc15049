#include "modelavg/federation.hpp"

#include <algorithm>
#include <tuple>

namespace modelavg {

FederationScenario::FederationScenario(SampleSource focal, std::vector<SampleSource> helpers)
    : focal_(std::move(focal)), helpers_(std::move(helpers)) {
  if (focal_.n == 0) throw PreconditionError("federation: focal sample count must be >= 1");
  if (helpers_.empty()) throw PreconditionError("federation: at least one helper is required");
  for (const auto& h : helpers_) {
    if (h.n == 0) throw PreconditionError("federation: helper sample counts must be >= 1");
  }
}

Scenario reduce_to_two_agent(const FederationScenario& f) {
  struct Term {
    double n, mean, variance;
  };
  std::vector<Term> terms;
  terms.reserve(f.helpers().size());
  for (const auto& h : f.helpers()) {
    terms.push_back({static_cast<double>(h.n), h.spec.mean(), h.spec.variance()});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::tie(a.n, a.mean, a.variance) < std::tie(b.n, b.mean, b.variance);
  });

  double total = 0.0;
  double weighted_mean = 0.0;
  double weighted_var = 0.0;
  for (const auto& t : terms) {
    total += t.n;
    weighted_mean += t.n * t.mean;
    weighted_var += t.n * t.variance;
  }
  std::uint64_t n_total = 0;
  for (const auto& h : f.helpers()) n_total += h.n;

  const auto& x = f.focal();
  return Scenario(x.spec.mean(), x.spec.variance(), x.n, weighted_mean / total,
                  weighted_var / total, SampleSize(n_total));
}

PersonalizedWeight personalized_weight(const FederationScenario& f) {
  const ErrorProfile p = error_profile(reduce_to_two_agent(f));
  return {p.alpha_star, p};
}

PooledMeanEstimate simulate_pooled_mean(const FederationScenario& f, std::uint64_t trials,
                                        SeedSpec seed, unsigned workers) {
  // Pooled Ybar is the alpha = 1 estimator; its moments are what we want.
  const double alphas[] = {1.0};
  const auto s = simulate_estimator(f.realized(), alphas, trials, seed, workers).front();
  return {s.mean, s.mean_se, s.variance, s.variance_se, trials};
}

}  // namespace modelavg
