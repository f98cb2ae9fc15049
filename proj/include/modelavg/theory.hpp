#pragma once

#include <cstdint>

#include "modelavg/core.hpp"

namespace modelavg {

/// Two-agent problem instance described by moments only: the local variable
/// X with n_x samples, the helper Y with n_y samples (possibly infinite,
/// meaning Var[Ybar] = 0).
class Scenario {
 public:
  Scenario(double mu_x, double var_x, std::uint64_t n_x, double mu_y, double var_y,
           SampleSize n_y);

  [[nodiscard]] double mu_x() const { return mu_x_; }
  [[nodiscard]] double var_x() const { return var_x_; }
  [[nodiscard]] std::uint64_t n_x() const { return n_x_; }
  [[nodiscard]] double mu_y() const { return mu_y_; }
  [[nodiscard]] double var_y() const { return var_y_; }
  [[nodiscard]] SampleSize n_y() const { return n_y_; }

  /// Var[Xbar] = var_x / n_x.
  [[nodiscard]] double var_xbar() const;
  /// Var[Ybar] = var_y / n_y, and 0 for infinite n_y.
  [[nodiscard]] double var_ybar() const;
  /// (mu_y - mu_x)^2.
  [[nodiscard]] double bias2() const;

 private:
  double mu_x_;
  double var_x_;
  std::uint64_t n_x_;
  double mu_y_;
  double var_y_;
  SampleSize n_y_;
};

/// Closed-form error triple. `degenerate` is set iff e0 == e1 == 0, in which
/// case every weight is optimal and alpha_star is reported as 0.
struct ErrorProfile {
  double e0 = 0.0;
  double e1 = 0.0;
  double alpha_star = 0.0;
  bool degenerate = false;

  /// ESE at the optimal weight, (1 - alpha_star) * e0.
  [[nodiscard]] double ese_optimal() const;
  /// 2 * alpha_star: weights below it strictly beat the local mean.
  [[nodiscard]] double break_even_alpha() const { return 2.0 * alpha_star; }
};

/// Builds a profile from (e0, e1) directly, e.g. for tests or plotted cases.
ErrorProfile make_profile(double e0, double e1);

double ese0(const Scenario& s);
double ese1(const Scenario& s);
ErrorProfile error_profile(const Scenario& s);

/// (1 - alpha)^2 e0 + alpha^2 e1. Throws DomainError unless alpha is in [0, 1].
double ese_of_alpha(const ErrorProfile& p, double alpha);

/// The same error written through alpha_star: (1 + alpha (alpha / alpha_star - 2)) e0.
/// Throws DomainError if alpha_star <= 0.
double ese_of_alpha_reduced(double alpha, double alpha_star, double e0);

struct AlphaBounds {
  Extended bias;      ///< Var[Xbar] / bias^2
  Extended variance;  ///< Var[Xbar] / Var[Ybar]

  [[nodiscard]] Extended tightest() const { return min(bias, variance); }
};

/// Two simple upper bounds on alpha_star, each +inf when its denominator is 0.
/// Throws DomainError when var_x == 0.
AlphaBounds alpha_star_upper_bounds(const Scenario& s);

/// max over alpha in [0, 1] of the ESE: e0 if e0 > 0 and alpha_star >= 1/2, else e1.
double max_ese(const ErrorProfile& p);

/// alpha_star from the two axis ratios Var[Xbar]/bias^2 and Var[Xbar]/Var[Ybar]:
/// 1 / (1 + 1/a + 1/b). Ratios must be positive; +inf drops the term.
double alpha_star_from_ratios(const Extended& varxbar_over_bias2,
                              const Extended& varxbar_over_varybar);

/// Two-agent MSE of the optimally weighted average when both true means are
/// drawn from a common variable of variance sigma2 and both agents share the
/// data variance mu_e.
double donahue_mse(std::uint64_t n_x, std::uint64_t n_y, double sigma2, double mu_e);

}  // namespace modelavg
