#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "modelavg/distributions.hpp"
#include "modelavg/montecarlo.hpp"
#include "modelavg/theory.hpp"

namespace modelavg {

/// Malformed or invalid scenario file.
class ConfigError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

enum class HelperKind { Distribution, Constant, Union };

/// One scenario from a scenario file.
struct ScenarioConfig {
  std::string name;
  SampleSource x;
  HelperKind helper_kind = HelperKind::Distribution;
  /// Distribution: one entry; Constant: one point mass; Union: the helpers.
  std::vector<SampleSource> helpers;
  /// n_y for Distribution/Constant helpers. Union helpers use sum of n_i.
  SampleSize n_y = SampleSize::infinite();
  /// Harness self-check: scales e0 of the closed form used by `validate`.
  double closed_form_e0_scale = 1.0;

  /// Moment-level scenario (unions are reduced to the two-agent model).
  [[nodiscard]] Scenario moment_scenario() const;
  /// Simulation input; throws UnsupportedInSimulation for infinite n_y.
  [[nodiscard]] RealizedScenario realized() const;
};

struct ContourConfig {
  double min = 1e-3;
  double max = 1e3;
  int points = 61;
};

/// Every parameter a subcommand needs. A run is fully determined by this
/// value together with the resolved seed.
struct RunConfig {
  std::vector<ScenarioConfig> scenarios;
  /// Federation given as a list of agents, each taking a turn as focal.
  std::vector<SampleSource> agents;
  std::vector<double> alphas;
  std::uint64_t trials = kDefaultTrials;
  std::optional<std::uint64_t> seed;
  double k = kDefaultK;
  int grid = 1001;
  ContourConfig contour;
};

/// Parses the JSON scenario format. Accepted top-level keys: a single
/// scenario inline (x, n_x, y, n_y) or "scenarios": [...], plus "agents",
/// "alphas", "trials", "seed", "k", "grid", "contour".
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Flag, then file, then $COLLAB_AVG_SEED, then 0.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const RunConfig& config);

}  // namespace modelavg
