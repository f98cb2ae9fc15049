#include "modelavg/theory.hpp"

#include <cmath>

namespace modelavg {
namespace {

void check_alpha(double alpha, const char* op) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError(std::string(op) + ": alpha outside [0, 1]");
  }
}

}  // namespace

Scenario::Scenario(double mu_x, double var_x, std::uint64_t n_x, double mu_y, double var_y,
                   SampleSize n_y)
    : mu_x_(mu_x), var_x_(var_x), n_x_(n_x), mu_y_(mu_y), var_y_(var_y), n_y_(n_y) {
  if (!std::isfinite(mu_x) || !std::isfinite(mu_y) || !std::isfinite(var_x) ||
      !std::isfinite(var_y)) {
    throw PreconditionError("Scenario: means and variances must be finite");
  }
  if (var_x < 0.0 || var_y < 0.0) throw PreconditionError("Scenario: negative variance");
  if (n_x == 0) throw PreconditionError("Scenario: n_x must be positive");
  if (!std::isfinite(bias2())) throw PreconditionError("Scenario: squared bias overflows");
}

double Scenario::var_xbar() const { return var_x_ / static_cast<double>(n_x_); }

double Scenario::var_ybar() const {
  if (n_y_.is_infinite()) return 0.0;
  return var_y_ / static_cast<double>(n_y_.count());
}

double Scenario::bias2() const {
  const double d = mu_y_ - mu_x_;
  return d * d;
}

double ErrorProfile::ese_optimal() const { return (1.0 - alpha_star) * e0; }

ErrorProfile make_profile(double e0, double e1) {
  if (!(e0 >= 0.0 && e1 >= 0.0) || !std::isfinite(e0) || !std::isfinite(e1)) {
    throw PreconditionError("make_profile: errors must be finite and non-negative");
  }
  ErrorProfile p{e0, e1, 0.0, false};
  if (e0 + e1 == 0.0) {
    p.degenerate = true;
  } else {
    p.alpha_star = e0 / (e0 + e1);
  }
  return p;
}

double ese0(const Scenario& s) { return s.var_xbar(); }

double ese1(const Scenario& s) { return s.bias2() + s.var_ybar(); }

ErrorProfile error_profile(const Scenario& s) { return make_profile(ese0(s), ese1(s)); }

double ese_of_alpha(const ErrorProfile& p, double alpha) {
  check_alpha(alpha, "ese_of_alpha");
  const double stay = 1.0 - alpha;
  return stay * stay * p.e0 + alpha * alpha * p.e1;
}

double ese_of_alpha_reduced(double alpha, double alpha_star, double e0) {
  if (!(alpha_star > 0.0)) {
    throw DomainError("ese_of_alpha_reduced: alpha_star must be > 0 (requires var_x > 0)");
  }
  return (1.0 + alpha * (alpha / alpha_star - 2.0)) * e0;
}

AlphaBounds alpha_star_upper_bounds(const Scenario& s) {
  if (s.var_x() == 0.0) throw DomainError("alpha_star_upper_bounds: var_x must be > 0");
  const double v = s.var_xbar();
  return {ratio_or_infinity(v, s.bias2()), ratio_or_infinity(v, s.var_ybar())};
}

double max_ese(const ErrorProfile& p) {
  return (p.e0 > 0.0 && p.alpha_star >= 0.5) ? p.e0 : p.e1;
}

double alpha_star_from_ratios(const Extended& varxbar_over_bias2,
                              const Extended& varxbar_over_varybar) {
  auto inverse = [](const Extended& r) {
    if (r.is_infinite()) return 0.0;
    if (!(r.value() > 0.0)) throw DomainError("alpha_star_from_ratios: ratios must be > 0");
    return 1.0 / r.value();
  };
  return 1.0 / (1.0 + inverse(varxbar_over_bias2) + inverse(varxbar_over_varybar));
}

double donahue_mse(std::uint64_t n_x, std::uint64_t n_y, double sigma2, double mu_e) {
  if (n_x == 0 || n_y == 0) throw PreconditionError("donahue_mse: sample counts must be positive");
  if (!(sigma2 >= 0.0)) throw PreconditionError("donahue_mse: sigma2 must be >= 0");
  if (!(mu_e > 0.0)) throw DomainError("donahue_mse: mu_e must be > 0");
  const double nx = static_cast<double>(n_x);
  const double ny = static_cast<double>(n_y);
  const double numerator = 2.0 * ny * ny * sigma2 + mu_e * ny;
  const double denominator = ny * (ny + nx) + 2.0 * nx * ny * ny * sigma2 / mu_e;
  return numerator / denominator;
}

}  // namespace modelavg
