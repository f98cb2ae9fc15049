#include "modelavg/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "modelavg/estimation.hpp"

namespace modelavg {
namespace {

struct TrialMeans {
  std::vector<double> xbar;
  std::vector<double> ybar;
};

void check_inputs(const RealizedScenario& s, std::span<const double> alphas,
                  std::uint64_t trials) {
  if (trials < kMinTrials) throw PreconditionError("Monte Carlo needs at least 100 trials");
  if (s.x.n == 0) throw PreconditionError("n_x must be >= 1");
  if (s.helpers.empty()) throw PreconditionError("at least one helper source is required");
  for (const auto& h : s.helpers) {
    if (h.n == 0) throw PreconditionError("helper sample counts must be >= 1");
  }
  for (double a : alphas) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("Monte Carlo: alpha outside [0, 1]");
  }
}

unsigned resolve_workers(unsigned workers, std::uint64_t trials) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));
}

void run_trials(const RealizedScenario& s, SeedSpec seed, std::uint64_t begin, std::uint64_t end,
                TrialMeans& out) {
  std::vector<double> xs(s.x.n);
  std::vector<double> ys(s.helper_sample_count());
  for (std::uint64_t t = begin; t < end; ++t) {
    Engine engine = make_engine(seed, t);
    draw(s.x.spec, engine, xs);
    std::size_t offset = 0;
    for (const auto& h : s.helpers) {
      draw(h.spec, engine, std::span<double>(ys).subspan(offset, h.n));
      offset += h.n;
    }
    out.xbar[t] = empirical_mean(xs);
    out.ybar[t] = empirical_mean(ys);
  }
}

TrialMeans simulate_means(const RealizedScenario& s, std::uint64_t trials, SeedSpec seed,
                          unsigned workers) {
  TrialMeans means{std::vector<double>(trials), std::vector<double>(trials)};
  workers = resolve_workers(workers, trials);
  if (workers == 1) {
    run_trials(s, seed, 0, trials, means);
    return means;
  }
  // Each trial writes only its own slot, so the partition cannot change results.
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (trials + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(trials, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] { run_trials(s, seed, begin, end, means); });
  }
  return means;
}

// Neumaier summation: keeps long sums of near-identical terms accurate to a few ulps.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

EstimatorSummary summarize(const TrialMeans& means, double alpha, double target,
                           std::uint64_t trials, SeedSpec seed) {
  const auto n = static_cast<double>(trials);
  std::vector<double> est(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    est[t] = weighted_average(means.xbar[t], means.ybar[t], alpha);
  }

  EstimatorSummary out;
  out.alpha = alpha;

  CompensatedSum sum;
  for (double v : est) sum.add(v);
  out.mean = sum.value() / n;

  CompensatedSum m2_sum;
  CompensatedSum m4_sum;
  for (double v : est) {
    const double d2 = (v - out.mean) * (v - out.mean);
    m2_sum.add(d2);
    m4_sum.add(d2 * d2);
  }
  const double m2 = m2_sum.value();
  const double m4 = m4_sum.value();
  out.variance = m2 / (n - 1.0);
  out.mean_se = std::sqrt(out.variance / n);
  const double pop_var = m2 / n;
  out.variance_se = std::sqrt(std::max(0.0, m4 / n - pop_var * pop_var) / n);

  CompensatedSum se_sum;
  for (double v : est) se_sum.add(squared_error(v, target));
  const double mse = se_sum.value() / n;
  CompensatedSum dev;
  for (double v : est) {
    const double d = squared_error(v, target) - mse;
    dev.add(d * d);
  }
  out.ese = {mse, std::sqrt(dev.value() / (n - 1.0) / n), trials, seed};
  return out;
}

RealizedScenario two_agent(const DistributionSpec& x, std::uint64_t n_x, const DistributionSpec& y,
                           SampleSize n_y) {
  if (n_y.is_infinite()) {
    throw UnsupportedInSimulation("an infinite helper sample count cannot be simulated");
  }
  return {{x, n_x}, {{y, n_y.count()}}};
}

}  // namespace

std::uint64_t RealizedScenario::helper_sample_count() const {
  std::uint64_t total = 0;
  for (const auto& h : helpers) total += h.n;
  return total;
}

std::vector<EstimatorSummary> simulate_estimator(const RealizedScenario& s,
                                                 std::span<const double> alphas,
                                                 std::uint64_t trials, SeedSpec seed,
                                                 unsigned workers) {
  check_inputs(s, alphas, trials);
  const TrialMeans means = simulate_means(s, trials, seed, workers);
  const double target = s.x.spec.mean();
  std::vector<EstimatorSummary> out;
  out.reserve(alphas.size());
  for (double a : alphas) out.push_back(summarize(means, a, target, trials, seed));
  return out;
}

std::vector<MonteCarloEstimate> estimate_error_curve(const RealizedScenario& s,
                                                     std::span<const double> alphas,
                                                     std::uint64_t trials, SeedSpec seed,
                                                     unsigned workers) {
  std::vector<MonteCarloEstimate> out;
  for (const auto& summary : simulate_estimator(s, alphas, trials, seed, workers)) {
    out.push_back(summary.ese);
  }
  return out;
}

std::vector<MonteCarloEstimate> estimate_error_curve(const DistributionSpec& x, std::uint64_t n_x,
                                                     const DistributionSpec& y, SampleSize n_y,
                                                     std::span<const double> alphas,
                                                     std::uint64_t trials, SeedSpec seed,
                                                     unsigned workers) {
  return estimate_error_curve(two_agent(x, n_x, y, n_y), alphas, trials, seed, workers);
}

MonteCarloEstimate estimate_ese(const DistributionSpec& x, std::uint64_t n_x,
                                const DistributionSpec& y, SampleSize n_y, double alpha,
                                std::uint64_t trials, SeedSpec seed, unsigned workers) {
  const double alphas[] = {alpha};
  return estimate_error_curve(x, n_x, y, n_y, alphas, trials, seed, workers).front();
}

std::vector<double> validation_grid() {
  std::vector<double> grid(21);
  for (int i = 0; i <= 20; ++i) grid[i] = i / 20.0;
  return grid;
}

ValidationReport validate_scenario(const RealizedScenario& s, const ErrorProfile& closed_form,
                                   std::uint64_t trials, SeedSpec seed, double k,
                                   unsigned workers) {
  if (!(k > 0.0)) throw PreconditionError("validate_scenario: k must be > 0");
  const auto grid = validation_grid();
  const auto curve = estimate_error_curve(s, grid, trials, seed, workers);
  ValidationReport report;
  report.k = k;
  report.pass = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ValidationPoint p;
    p.alpha = grid[i];
    p.mc = curve[i];
    p.closed_form = ese_of_alpha(closed_form, grid[i]);
    p.abs_diff = std::abs(p.mc.mean_sq_error - p.closed_form);
    // Deterministic scenarios have std_error == 0; allow for rounding only.
    p.tolerance = k * p.mc.std_error + 1e-12 * std::max(1.0, std::abs(p.closed_form));
    p.pass = p.abs_diff <= p.tolerance;
    report.pass = report.pass && p.pass;
    report.points.push_back(p);
  }
  return report;
}

ValidationReport validate_scenario(const RealizedScenario& s, std::uint64_t trials, SeedSpec seed,
                                   double k, unsigned workers) {
  if (s.helpers.size() != 1) {
    throw PreconditionError("validate_scenario: pooled helpers need an explicit closed form");
  }
  const auto& h = s.helpers.front();
  const Scenario moments_only(s.x.spec.mean(), s.x.spec.variance(), s.x.n, h.spec.mean(),
                              h.spec.variance(), SampleSize(h.n));
  return validate_scenario(s, error_profile(moments_only), trials, seed, k, workers);
}

}  // namespace modelavg
