#pragma once

#include <array>
#include <string>
#include <vector>

namespace modelavg {

/// An input cell of the published table: a finite value, "*" (any finite
/// positive value leaves alpha_star unchanged), or +infinity.
struct InputCell {
  enum class Kind { Finite, Star, Infinite };
  Kind kind = Kind::Finite;
  double value = 0.0;

  static InputCell parse(const std::string& text);
  [[nodiscard]] std::string to_string() const;
};

enum class RowStatus { Match, Mismatch, NotComparable };
std::string to_string(RowStatus s);

/// Output columns, in table order.
enum Column { kAlphaStar = 0, kOptRatio = 1, kFifthRatio = 2, kHalfRatio = 3 };
inline constexpr int kOutputColumns = 4;

struct TableRow {
  InputCell bias2_over_varx;
  InputCell n_x;
  InputCell vary_over_varx;
  InputCell ny_over_nx;

  /// alpha_star, e_opt/e0, e_{1/5}/e0, e_{1/2}/e0; +inf where unbounded.
  std::array<double, kOutputColumns> computed{};
  /// Published strings after resolving inherited blank cells.
  std::array<std::string, kOutputColumns> printed;
  std::array<double, kOutputColumns> tolerance{};
  std::array<bool, kOutputColumns> cell_match{};
  RowStatus status = RowStatus::NotComparable;
  /// Set for rows whose published values are known to disagree with the inputs.
  bool known_discrepancy = false;

  [[nodiscard]] double alpha_star() const { return computed[kAlphaStar]; }
  [[nodiscard]] double e_ratio_opt() const { return computed[kOptRatio]; }
  [[nodiscard]] double e_ratio_fifth() const { return computed[kFifthRatio]; }
  [[nodiscard]] double e_ratio_half() const { return computed[kHalfRatio]; }
};

/// Default tolerance: half a unit in the second decimal.
inline constexpr double kTableTolerance = 0.005;

/// The 17 published rows, with inherited blank cells copied from above.
/// `star_value` is substituted for every "*" cell (rounded to an integer for
/// n_x); the outputs must not depend on it.
std::vector<TableRow> build_table1(double star_value = 1.0);

/// Computes (alpha_star, e_opt/e0, e_{1/5}/e0, e_{1/2}/e0) for one input row,
/// normalizing var_x to 1. Rows with n_x or bias^2 infinite are evaluated as
/// limits (alpha_star = 0, e_opt/e0 = 1). Returns NaNs when the limit is
/// undefined.
std::array<double, kOutputColumns> evaluate_row(const InputCell& bias2_over_varx,
                                                const InputCell& n_x,
                                                const InputCell& vary_over_varx,
                                                const InputCell& ny_over_nx, double star_value);

/// Published-value comparison: round `computed` half-even to the printed
/// number of decimals, then require |rounded - printed| <= tolerance.
bool matches_printed(double computed, const std::string& printed, double tolerance);

}  // namespace modelavg
