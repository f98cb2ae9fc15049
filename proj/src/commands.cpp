#include "modelavg/commands.hpp"

#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "modelavg/federation.hpp"
#include "modelavg/format.hpp"
#include "modelavg/montecarlo.hpp"
#include "modelavg/table1.hpp"
#include "modelavg/theory.hpp"

namespace modelavg {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

std::string num(double v) { return format_shortest(v); }

bool require_scenarios(const RunConfig& config, std::ostream& diag, const char* command) {
  if (!config.scenarios.empty()) return true;
  diag << "error: " << command << " needs a scenario (keys x, n_x, y, n_y)\n";
  return false;
}

void profile_one(const ScenarioConfig& sc, const std::vector<double>& alphas, std::ostream& out,
                 std::ostream& diag) {
  const Scenario s = sc.moment_scenario();
  const ErrorProfile p = error_profile(s);
  auto put = [&](const std::string& key, const std::string& value) {
    write_row(out, {sc.name, key, value});
  };

  put("mu_x", num(s.mu_x()));
  put("var_x", num(s.var_x()));
  put("n_x", std::to_string(s.n_x()));
  put("mu_y", num(s.mu_y()));
  put("var_y", num(s.var_y()));
  put("n_y", to_string(s.n_y()));
  put("var_xbar", num(s.var_xbar()));
  put("var_ybar", num(s.var_ybar()));
  put("bias2", num(s.bias2()));
  put("e0", num(p.e0));
  put("e1", num(p.e1));
  put("alpha_star", num(p.alpha_star));
  put("degenerate", p.degenerate ? "1" : "0");
  put("ese_opt", num(p.ese_optimal()));
  put("break_even_alpha", num(p.break_even_alpha()));
  put("max_ese", num(max_ese(p)));

  if (p.degenerate) {
    diag << "warning: [" << sc.name << "] degenerate scenario (e0 = e1 = 0); every weight is "
         << "optimal, alpha_star reported as 0\n";
  } else if (p.e0 == 0.0) {
    diag << "warning: [" << sc.name << "] local model already exact (var_x = 0); alpha_star = 0\n";
  }
  if (p.e0 > 0.0) {
    put("ese_opt_ratio", num(p.ese_optimal() / p.e0));
    const AlphaBounds b = alpha_star_upper_bounds(s);
    put("bound_bias", to_string(b.bias));
    put("bound_var", to_string(b.variance));
  }
  for (double a : alphas) {
    const double e = ese_of_alpha(p, a);
    put("ese@" + num(a), num(e));
    if (p.e0 > 0.0) put("ese_ratio@" + num(a), num(e / p.e0));
  }
}

std::string table_value(double v) { return format_fixed(v, 2); }

}  // namespace

int cmd_profile(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  if (!require_scenarios(config, diag, "profile")) return kExitInvalidInput;
  const std::vector<double> alphas =
      config.alphas.empty() ? std::vector<double>{0.2, 0.5} : config.alphas;
  write_row(out, {"scenario", "quantity", "value"});
  for (const auto& sc : config.scenarios) profile_one(sc, alphas, out, diag);
  return kExitOk;
}

int cmd_table1(const RunConfig& /*config*/, std::ostream& out, std::ostream& diag) {
  const auto rows = build_table1();
  write_row(out, {"row", "bias2_over_varx", "n_x", "vary_over_varx", "ny_over_nx", "alpha_star",
                  "e_opt_ratio", "e_fifth_ratio", "e_half_ratio", "printed_alpha_star",
                  "printed_e_opt_ratio", "printed_e_fifth_ratio", "printed_e_half_ratio",
                  "status"});
  static constexpr const char* kNames[] = {"alpha_star", "e_opt/e0", "e_1/5/e0", "e_1/2/e0"};
  int mismatches = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::vector<std::string> fields = {std::to_string(r + 1),          row.bias2_over_varx.to_string(),
                                       row.n_x.to_string(),            row.vary_over_varx.to_string(),
                                       row.ny_over_nx.to_string()};
    for (double v : row.computed) fields.push_back(table_value(v));
    for (const auto& p : row.printed) fields.push_back(p);
    fields.push_back(to_string(row.status));
    write_row(out, fields);

    if (row.status == RowStatus::Match) {
      for (int c = 0; c < kOutputColumns; ++c) {
        if (row.tolerance[c] > kTableTolerance) {
          diag << "row " << r + 1 << ": " << kNames[c] << " computed " << table_value(row.computed[c])
               << " vs printed " << row.printed[c] << " (within widened tolerance "
               << num(row.tolerance[c]) << ")\n";
        }
      }
      continue;
    }
    ++mismatches;
    diag << "row " << r + 1 << ": " << to_string(row.status)
         << (row.known_discrepancy ? " (known: printed values inconsistent with inputs)" : "")
         << '\n';
    for (int c = 0; c < kOutputColumns; ++c) {
      if (!row.cell_match[c]) {
        diag << "  " << kNames[c] << ": computed " << table_value(row.computed[c])
             << ", printed " << row.printed[c] << '\n';
      }
    }
  }
  diag << rows.size() << " rows, " << mismatches << " not matching the published values\n";
  return kExitOk;
}

int cmd_curve(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  if (!require_scenarios(config, diag, "curve")) return kExitInvalidInput;
  const ErrorProfile p = error_profile(config.scenarios.front().moment_scenario());
  if (!(p.alpha_star > 0.0)) {
    diag << "error: curve needs alpha_star > 0 (var_x > 0 and a non-degenerate scenario)\n";
    return kExitInvalidInput;
  }
  write_row(out, {"alpha", "ese_ratio", "lower_bound", "upper_bound_segment"});
  const int n = config.grid;
  for (int i = 0; i < n; ++i) {
    const double a = i == n - 1 ? 1.0 : static_cast<double>(i) / (n - 1);
    write_row(out, {num(a), num(ese_of_alpha(p, a) / p.e0), num(1.0 - 2.0 * a),
                    a <= p.alpha_star ? num(1.0 - a) : std::string()});
  }
  diag << "alpha_star = " << num(p.alpha_star) << ", break-even alpha = "
       << num(p.break_even_alpha()) << '\n';
  return kExitOk;
}

int cmd_contour(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  const auto& c = config.contour;
  const double lo = std::log(c.min);
  const double hi = std::log(c.max);
  std::vector<double> axis(c.points);
  for (int i = 0; i < c.points; ++i) {
    axis[i] = i == 0 ? c.min
              : i == c.points - 1 ? c.max
                                  : std::exp(lo + (hi - lo) * i / (c.points - 1));
  }
  write_row(out, {"varxbar_over_bias2", "varxbar_over_varybar", "alpha_star"});
  for (double a : axis) {
    for (double b : axis) {
      write_row(out, {num(a), num(b), num(alpha_star_from_ratios(a, b))});
    }
  }
  diag << c.points << "x" << c.points << " grid over [" << num(c.min) << ", " << num(c.max)
       << "]; contour levels of interest: 0.01, 0.1, 0.5\n";
  return kExitOk;
}

int cmd_validate(const RunConfig& config, const RunOptions& options, std::ostream& out,
                 std::ostream& diag) {
  if (!require_scenarios(config, diag, "validate")) return kExitInvalidInput;
  std::vector<RealizedScenario> realized;
  std::vector<ErrorProfile> closed;
  for (const auto& sc : config.scenarios) {
    try {
      realized.push_back(sc.realized());
    } catch (const UnsupportedInSimulation& e) {
      diag << "error: " << e.what() << '\n';
      return kExitInvalidInput;
    }
    const ErrorProfile p = error_profile(sc.moment_scenario());
    closed.push_back(make_profile(p.e0 * sc.closed_form_e0_scale, p.e1));
  }

  write_row(out, {"scenario", "alpha", "mc_ese", "std_error", "closed_form", "abs_diff",
                  "tolerance", "pass"});
  bool all_pass = true;
  for (std::size_t i = 0; i < realized.size(); ++i) {
    const SeedSpec seed{options.seed, i};
    const auto report =
        validate_scenario(realized[i], closed[i], config.trials, seed, config.k, options.workers);
    int failed = 0;
    for (const auto& pt : report.points) {
      write_row(out, {config.scenarios[i].name, num(pt.alpha), num(pt.mc.mean_sq_error),
                      num(pt.mc.std_error), num(pt.closed_form), num(pt.abs_diff),
                      num(pt.tolerance), pt.pass ? "1" : "0"});
      failed += pt.pass ? 0 : 1;
    }
    diag << (report.pass ? "PASS " : "FAIL ") << config.scenarios[i].name << ": "
         << report.points.size() - failed << "/" << report.points.size() << " points within "
         << num(config.k) << " SE (trials=" << config.trials << ", seed=" << options.seed
         << ")\n";
    all_pass = all_pass && report.pass;
  }
  return all_pass ? kExitOk : kExitValidationFailed;
}

int cmd_federate(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  std::vector<std::pair<std::string, FederationScenario>> feds;
  if (!config.agents.empty()) {
    for (std::size_t i = 0; i < config.agents.size(); ++i) {
      std::vector<SampleSource> helpers;
      for (std::size_t j = 0; j < config.agents.size(); ++j) {
        if (j != i) helpers.push_back(config.agents[j]);
      }
      feds.emplace_back("agent" + std::to_string(i), FederationScenario(config.agents[i], helpers));
    }
  } else {
    for (const auto& sc : config.scenarios) {
      if (sc.helper_kind != HelperKind::Union) {
        diag << "error: federate needs y.union or a top-level agents list (scenario '" << sc.name
             << "')\n";
        return kExitInvalidInput;
      }
      feds.emplace_back(sc.name, FederationScenario(sc.x, sc.helpers));
    }
  }
  if (feds.empty()) {
    diag << "error: federate needs y.union or a top-level agents list\n";
    return kExitInvalidInput;
  }

  write_row(out, {"focal", "mu_x", "var_x", "n_x", "mu_y", "var_y", "n_y", "var_ybar", "e0", "e1",
                  "alpha_star", "ese_opt_ratio"});
  for (const auto& [name, fed] : feds) {
    const Scenario s = reduce_to_two_agent(fed);
    const auto w = personalized_weight(fed);
    write_row(out, {name, num(s.mu_x()), num(s.var_x()), std::to_string(s.n_x()), num(s.mu_y()),
                    num(s.var_y()), to_string(s.n_y()), num(s.var_ybar()), num(w.profile.e0),
                    num(w.profile.e1), num(w.alpha_star),
                    w.profile.e0 > 0.0 ? num(1.0 - w.alpha_star) : std::string()});
    if (w.profile.e0 == 0.0) {
      diag << "warning: [" << name << "] local model already exact (var_x = 0); alpha_star = 0\n";
    }
  }
  return kExitOk;
}

}  // namespace modelavg
