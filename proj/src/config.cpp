#include "modelavg/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "modelavg/federation.hpp"
#include "modelavg/format.hpp"

namespace modelavg {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

const json& require_key(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where + ": missing key '" + key + "'");
  return j.at(key);
}

std::uint64_t positive_count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
    fail(where + ": expected a positive integer");
  }
  return j.get<std::uint64_t>();
}

SampleSize sample_size(const json& j, const std::string& where) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf" || s == "infinite") return SampleSize::infinite();
    fail(where + ": expected a positive integer or \"inf\"");
  }
  return SampleSize(positive_count(j, where));
}

double real(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where + ": expected a number");
  return j.get<double>();
}

DistributionSpec distribution(const json& j, const std::string& where) {
  const auto& fam = require_key(j, "family", where);
  if (!fam.is_string()) fail(where + ".family: expected a string");
  std::vector<double> params;
  const auto& p = require_key(j, "params", where);
  if (!p.is_array()) fail(where + ".params: expected an array");
  for (const auto& v : p) params.push_back(real(v, where + ".params"));
  try {
    return DistributionSpec::from_params(parse_family(fam.get<std::string>()), params);
  } catch (const PreconditionError& e) {
    fail(where + ": " + e.what());
  }
}

SampleSource source(const json& j, const std::string& where) {
  return {distribution(j, where), positive_count(require_key(j, "n", where), where + ".n")};
}

std::vector<SampleSource> source_list(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where + ": expected a non-empty array");
  std::vector<SampleSource> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(source(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ScenarioConfig scenario(const json& j, const std::string& where) {
  ScenarioConfig s;
  s.name = j.value("name", where);
  s.x = {distribution(require_key(j, "x", where), where + ".x"),
         positive_count(require_key(j, "n_x", where), where + ".n_x")};

  const auto& y = require_key(j, "y", where);
  if (y.contains("union")) {
    s.helper_kind = HelperKind::Union;
    s.helpers = source_list(y.at("union"), where + ".y.union");
    std::uint64_t total = 0;
    for (const auto& h : s.helpers) total += h.n;
    s.n_y = SampleSize(total);
    if (j.contains("n_y") && !(sample_size(j.at("n_y"), where + ".n_y") == s.n_y)) {
      fail(where + ".n_y: must equal the union's total sample count");
    }
  } else if (y.contains("constant")) {
    s.helper_kind = HelperKind::Constant;
    s.n_y = j.contains("n_y") ? sample_size(j.at("n_y"), where + ".n_y") : SampleSize(1);
    s.helpers = {{DistributionSpec::point_mass(real(y.at("constant"), where + ".y.constant")),
                  s.n_y.is_infinite() ? 1 : s.n_y.count()}};
  } else {
    s.helper_kind = HelperKind::Distribution;
    s.n_y = sample_size(require_key(j, "n_y", where), where + ".n_y");
    s.helpers = {{distribution(y, where + ".y"), s.n_y.is_infinite() ? 1 : s.n_y.count()}};
  }

  if (j.contains("closed_form_e0_scale")) {
    s.closed_form_e0_scale = real(j.at("closed_form_e0_scale"), where + ".closed_form_e0_scale");
    if (!(s.closed_form_e0_scale >= 0.0)) fail(where + ".closed_form_e0_scale: must be >= 0");
  }
  return s;
}

}  // namespace

Scenario ScenarioConfig::moment_scenario() const {
  if (helper_kind == HelperKind::Union) {
    return reduce_to_two_agent(FederationScenario(x, helpers));
  }
  const auto& y = helpers.front().spec;
  return Scenario(x.spec.mean(), x.spec.variance(), x.n, y.mean(), y.variance(), n_y);
}

RealizedScenario ScenarioConfig::realized() const {
  if (n_y.is_infinite()) {
    throw UnsupportedInSimulation("scenario '" + name + "': n_y = inf cannot be simulated");
  }
  return {x, helpers};
}

RunConfig parse_run_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("scenario file is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("scenario file: top level must be an object");

  RunConfig config;
  try {
    if (root.contains("scenarios")) {
      const auto& list = root.at("scenarios");
      if (!list.is_array() || list.empty()) fail("scenarios: expected a non-empty array");
      for (std::size_t i = 0; i < list.size(); ++i) {
        config.scenarios.push_back(scenario(list[i], "scenarios[" + std::to_string(i) + "]"));
      }
    } else if (root.contains("x")) {
      config.scenarios.push_back(scenario(root, "scenario"));
    }
    if (root.contains("agents")) {
      config.agents = source_list(root.at("agents"), "agents");
      if (config.agents.size() < 2) fail("agents: a federation needs at least two agents");
    }
    if (root.contains("alphas")) {
      const auto& a = root.at("alphas");
      if (!a.is_array()) fail("alphas: expected an array");
      for (const auto& v : a) {
        const double alpha = real(v, "alphas");
        if (!(alpha >= 0.0 && alpha <= 1.0)) fail("alphas: values must lie in [0, 1]");
        config.alphas.push_back(alpha);
      }
    }
    if (root.contains("trials")) {
      config.trials = positive_count(root.at("trials"), "trials");
      if (config.trials < kMinTrials) fail("trials: at least 100 required");
    }
    if (root.contains("seed")) {
      const auto& s = root.at("seed");
      if (!s.is_number_unsigned()) fail("seed: expected a non-negative integer");
      config.seed = s.get<std::uint64_t>();
    }
    if (root.contains("k")) {
      config.k = real(root.at("k"), "k");
      if (!(config.k > 0.0)) fail("k: must be > 0");
    }
    if (root.contains("grid")) {
      config.grid = static_cast<int>(positive_count(root.at("grid"), "grid"));
      if (config.grid < 2) fail("grid: at least 2 points required");
    }
    if (root.contains("contour")) {
      const auto& c = root.at("contour");
      config.contour.min = real(require_key(c, "min", "contour"), "contour.min");
      config.contour.max = real(require_key(c, "max", "contour"), "contour.max");
      if (c.contains("points")) {
        config.contour.points = static_cast<int>(positive_count(c.at("points"), "contour.points"));
      }
      if (!(config.contour.min > 0.0 && config.contour.min < config.contour.max) ||
          config.contour.points < 2) {
        fail("contour: need 0 < min < max and points >= 2");
      }
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const PreconditionError& e) {
    fail(e.what());
  } catch (const json::exception& e) {
    fail(std::string("scenario file: ") + e.what());
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open scenario file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag, const RunConfig& config) {
  if (flag) return *flag;
  if (config.seed) return *config.seed;
  if (const char* env = std::getenv("COLLAB_AVG_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || env[0] == '-') fail("COLLAB_AVG_SEED: expected an unsigned integer");
    return v;
  }
  return 0;
}

}  // namespace modelavg
