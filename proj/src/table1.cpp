#include "modelavg/table1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "modelavg/core.hpp"
#include "modelavg/format.hpp"
#include "modelavg/theory.hpp"

namespace modelavg {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Cells as published; "" inherits the cell above.
// bias^2/var_x, n_x, var_y/var_x, n_y/n_x | alpha*, e_opt/e0, e_1/5/e0, e_1/2/e0
constexpr std::array<std::array<const char*, 8>, 17> kPublished{{
    {"0", "*", "0", "*", "1.0", "0.00", "0.64", "0.25"},
    {"", "", "*", "inf", "1.0", "", "", ""},
    {"", "", "1", "6", "0.86", "0.14", "0.65", "0.29"},
    {"", "", "10", "60", "0.86", "", "", ""},
    {"", "", "1", "1", "0.50", "0.50", "0.68", "0.50"},
    {"", "", "10", "10", "0.50", "", "", ""},
    {"0.25", "10", "0", "inf", "0.57", "0.43", "0.67", "0.44"},
    {"", "", "1", "1", "0.44", "0.56", "0.69", "0.56"},
    {"", "100", "0", "inf", "0.04", "0.96", "1.64", "6.50"},
    {"", "", "1", "1", "0.04", "0.96", "1.68", "6.75"},
    {"", "20", "0", "inf", "0.17", "0.83", "0.84", "1.50"},
    {"1", "5", "0", "inf", "0.17", "", "", ""},
    {"", "", "1", "1", "0.14", "0.86", "0.88", "1.75"},
    {"", "50", "0", "inf", "0.02", "0.98", "2.64", "12.8"},
    {"", "", "1", "1", "0.02", "0.98", "2.65", "13.0"},
    {"*", "inf", "*", "*", "0.0", "1.00", "inf", "inf"},
    {"inf", "*", "*", "*", "0.0", "", "", ""},
}};

// Rows (0-based) whose published alpha_star is inconsistent with the inputs:
// bias^2/var_x = 0.25, n_x = 10 gives alpha_star = 0.1/0.35 and 0.1/0.45.
constexpr std::array<int, 2> kKnownDiscrepancies = {6, 7};

// The e_{1/5} cell of row 15 (bias^2 = var_x, n_x = 50, var_y = var_x, n_y = n_x)
// is printed as 2.65; the formula gives 2.68.
constexpr int kWideRow = 14;
constexpr double kWideTolerance = 0.04;

bool is_positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

double resolve(const InputCell& c, double star_value) {
  switch (c.kind) {
    case InputCell::Kind::Finite: return c.value;
    case InputCell::Kind::Star: return star_value;
    case InputCell::Kind::Infinite: return kInf;
  }
  return kNaN;
}

}  // namespace

InputCell InputCell::parse(const std::string& text) {
  if (text == "*") return {Kind::Star, 0.0};
  const double v = parse_double(text);
  if (std::isinf(v)) {
    if (v < 0) throw PreconditionError("table cell: negative infinity");
    return {Kind::Infinite, 0.0};
  }
  return {Kind::Finite, v};
}

std::string InputCell::to_string() const {
  switch (kind) {
    case Kind::Star: return "*";
    case Kind::Infinite: return "inf";
    case Kind::Finite: return format_shortest(value);
  }
  return "";
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Match: return "Match";
    case RowStatus::Mismatch: return "Mismatch";
    case RowStatus::NotComparable: return "NotComparable";
  }
  return "";
}

std::array<double, kOutputColumns> evaluate_row(const InputCell& bias2_over_varx,
                                                const InputCell& n_x,
                                                const InputCell& vary_over_varx,
                                                const InputCell& ny_over_nx, double star_value) {
  if (!is_positive_finite(star_value)) throw PreconditionError("star value must be finite > 0");
  const double bias2 = resolve(bias2_over_varx, star_value);
  const double nx = n_x.kind == InputCell::Kind::Star ? std::max(1.0, std::round(star_value))
                                                       : resolve(n_x, star_value);
  const double vary = resolve(vary_over_varx, star_value);
  const double ny_ratio = resolve(ny_over_nx, star_value);

  const bool finite_x = std::isfinite(nx) && std::isfinite(bias2);
  if (finite_x) {
    if (!std::isfinite(vary)) return {kNaN, kNaN, kNaN, kNaN};
    if (nx != std::floor(nx) || nx < 1) throw PreconditionError("n_x must be a positive integer");
    // Var[Ybar] = vary / (ny_ratio * nx); encoded with n_y = n_x so the
    // sample count stays integral for any ratio.
    const auto n = static_cast<std::uint64_t>(nx);
    const bool helper_exact = std::isinf(ny_ratio);
    const Scenario s(0.0, 1.0, n, std::sqrt(bias2), helper_exact ? 0.0 : vary / ny_ratio,
                     helper_exact ? SampleSize::infinite() : SampleSize(n));
    const ErrorProfile p = error_profile(s);
    return {p.alpha_star, p.ese_optimal() / p.e0, ese_of_alpha(p, 0.2) / p.e0,
            ese_of_alpha(p, 0.5) / p.e0};
  }

  // e0 -> 0 (n_x infinite, positive bias) or e1 -> inf (infinite bias):
  // e1/e0 is unbounded, so alpha_star -> 0 and every alpha > 0 costs +inf.
  const bool unbounded_ratio = std::isinf(bias2) || bias2 > 0.0;
  if (!unbounded_ratio) return {kNaN, kNaN, kNaN, kNaN};
  return {0.0, 1.0, kInf, kInf};
}

bool matches_printed(double computed, const std::string& printed, double tolerance) {
  const double expected = parse_double(printed);
  if (std::isnan(computed)) return false;
  if (std::isinf(expected) || std::isinf(computed)) return expected == computed;
  const double rounded = round_to(computed, decimals_of(printed));
  return std::abs(rounded - expected) <= tolerance + 1e-12;
}

std::vector<TableRow> build_table1(double star_value) {
  std::vector<TableRow> rows;
  std::array<std::string, 8> above;
  for (std::size_t r = 0; r < kPublished.size(); ++r) {
    std::array<std::string, 8> cells;
    for (int c = 0; c < 8; ++c) {
      cells[c] = *kPublished[r][c] != '\0' ? kPublished[r][c] : above[c];
    }
    above = cells;

    TableRow row;
    row.bias2_over_varx = InputCell::parse(cells[0]);
    row.n_x = InputCell::parse(cells[1]);
    row.vary_over_varx = InputCell::parse(cells[2]);
    row.ny_over_nx = InputCell::parse(cells[3]);
    row.computed = evaluate_row(row.bias2_over_varx, row.n_x, row.vary_over_varx,
                                row.ny_over_nx, star_value);
    row.known_discrepancy = std::find(kKnownDiscrepancies.begin(), kKnownDiscrepancies.end(),
                                      static_cast<int>(r)) != kKnownDiscrepancies.end();

    bool comparable = true;
    bool all_match = true;
    for (int c = 0; c < kOutputColumns; ++c) {
      row.printed[c] = cells[4 + c];
      row.tolerance[c] =
          (static_cast<int>(r) == kWideRow && c == kFifthRatio) ? kWideTolerance : kTableTolerance;
      if (std::isnan(row.computed[c])) comparable = false;
      row.cell_match[c] = matches_printed(row.computed[c], row.printed[c], row.tolerance[c]);
      all_match = all_match && row.cell_match[c];
    }
    row.status = !comparable ? RowStatus::NotComparable
                             : (all_match ? RowStatus::Match : RowStatus::Mismatch);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace modelavg
