// modelavg: closed-form and simulated error of weighted model averaging.
//
//   modelavg profile  --scenario s.json
//   modelavg table1   [--out table1.csv]
//   modelavg curve    --scenario s.json [--grid 1001]
//   modelavg contour  [--scenario grid.json] [--grid 61]
//   modelavg validate --scenario suite.json [--seed N] [--trials N] [--k 4]
//   modelavg federate --scenario fed.json

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "modelavg/commands.hpp"
#include "modelavg/config.hpp"

namespace {

struct Flags {
  std::string scenario;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<int> grid;
  std::optional<double> k;
  unsigned workers = 0;
};

int run(const std::string& command, const Flags& flags) {
  using namespace modelavg;
  RunConfig config;
  if (!flags.scenario.empty()) {
    config = load_run_config(flags.scenario);
  } else if (command != "table1" && command != "contour") {
    std::cerr << "error: " << command << " requires --scenario <path>\n";
    return kExitInvalidInput;
  }
  if (flags.trials) {
    if (*flags.trials < kMinTrials) {
      std::cerr << "error: --trials must be >= " << kMinTrials << '\n';
      return kExitInvalidInput;
    }
    config.trials = *flags.trials;
  }
  if (flags.grid) {
    if (*flags.grid < 2) {
      std::cerr << "error: --grid must be >= 2\n";
      return kExitInvalidInput;
    }
    config.grid = *flags.grid;
    config.contour.points = *flags.grid;
  }
  if (flags.k) {
    if (!(*flags.k > 0.0)) {
      std::cerr << "error: --k must be > 0\n";
      return kExitInvalidInput;
    }
    config.k = *flags.k;
  }
  const RunOptions options{resolve_seed(flags.seed, config), flags.workers};

  std::ofstream file;
  if (!flags.out.empty()) {
    file.open(flags.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot write " << flags.out << '\n';
      return kExitInvalidInput;
    }
  }
  std::ostream& out = flags.out.empty() ? std::cout : file;

  if (command == "profile") return cmd_profile(config, out, std::cerr);
  if (command == "table1") return cmd_table1(config, out, std::cerr);
  if (command == "curve") return cmd_curve(config, out, std::cerr);
  if (command == "contour") return cmd_contour(config, out, std::cerr);
  if (command == "validate") return cmd_validate(config, options, out, std::cerr);
  if (command == "federate") return cmd_federate(config, out, std::cerr);
  return kExitInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal weighted model averaging: closed form, tables, figure data, Monte Carlo"};
  app.require_subcommand(1);

  Flags flags;
  const std::pair<const char*, const char*> commands[] = {
      {"profile", "Error profile, alpha_star, bounds and ESE at the listed alphas"},
      {"table1", "Recompute the published table of alpha_star examples and compare"},
      {"curve", "ESE(alpha)/e0 with its linear bounds on a uniform alpha grid"},
      {"contour", "alpha_star over a log grid of Var[Xbar]/bias^2 and Var[Xbar]/Var[Ybar]"},
      {"validate", "Monte Carlo check of the closed-form ESE on a 21-point alpha grid"},
      {"federate", "Reduce a federation to the two-agent model and weight each focal agent"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--scenario", flags.scenario, "Scenario file (JSON)");
    sub->add_option("--out", flags.out, "Output CSV path (default: stdout)");
    sub->add_option("--seed", flags.seed, "Master seed (fallback: $COLLAB_AVG_SEED, then 0)");
    sub->add_option("--trials", flags.trials, "Monte Carlo trials per scenario");
    sub->add_option("--grid", flags.grid, "Grid resolution for curve/contour");
    sub->add_option("--k", flags.k, "Acceptance threshold in standard errors");
    sub->add_option("--workers", flags.workers, "Worker threads (0 = all cores)");
  }

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, flags);
  } catch (const modelavg::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return modelavg::kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return modelavg::kExitInvalidInput;
  }
}
