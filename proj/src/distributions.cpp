#include "modelavg/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "modelavg/core.hpp"
#include "modelavg/format.hpp"

namespace modelavg {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

std::size_t arity(Family f) {
  switch (f) {
    case Family::Normal:
    case Family::Uniform:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Normal: return "normal";
    case Family::Uniform: return "uniform";
    case Family::Bernoulli: return "bernoulli";
    case Family::Exponential: return "exponential";
    case Family::PointMass: return "point_mass";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Normal, Family::Uniform, Family::Bernoulli, Family::Exponential,
                   Family::PointMass}) {
    if (family_name(f) == name) return f;
  }
  throw PreconditionError("unknown distribution family: " + std::string(name));
}

DistributionSpec::DistributionSpec(Family family, std::vector<double> params)
    : family_(family), params_(std::move(params)) {
  require(params_.size() == arity(family_), "wrong number of distribution parameters");
  require(all_finite(params_), "distribution parameters must be finite");
  switch (family_) {
    case Family::Normal:
      require(params_[1] >= 0.0, "normal: sd must be >= 0");
      break;
    case Family::Uniform:
      require(params_[0] < params_[1], "uniform: lo must be < hi");
      require(std::isfinite(params_[1] - params_[0]), "uniform: width overflows");
      break;
    case Family::Bernoulli:
      require(params_[0] >= 0.0 && params_[0] <= 1.0, "bernoulli: p must lie in [0, 1]");
      break;
    case Family::Exponential:
      require(params_[0] > 0.0, "exponential: rate must be > 0");
      require(std::isfinite(1.0 / (params_[0] * params_[0])), "exponential: rate too small");
      break;
    case Family::PointMass:
      break;
  }
  require(std::isfinite(mean()) && std::isfinite(variance()), "moments overflow");
}

DistributionSpec DistributionSpec::normal(double mean, double sd) {
  return {Family::Normal, {mean, sd}};
}
DistributionSpec DistributionSpec::uniform(double lo, double hi) {
  return {Family::Uniform, {lo, hi}};
}
DistributionSpec DistributionSpec::bernoulli(double p) { return {Family::Bernoulli, {p}}; }
DistributionSpec DistributionSpec::exponential(double rate) {
  return {Family::Exponential, {rate}};
}
DistributionSpec DistributionSpec::point_mass(double c) { return {Family::PointMass, {c}}; }

DistributionSpec DistributionSpec::from_params(Family family, std::span<const double> params) {
  return {family, std::vector<double>(params.begin(), params.end())};
}

double DistributionSpec::mean() const {
  switch (family_) {
    case Family::Normal: return params_[0];
    case Family::Uniform: return 0.5 * (params_[0] + params_[1]);
    case Family::Bernoulli: return params_[0];
    case Family::Exponential: return 1.0 / params_[0];
    case Family::PointMass: return params_[0];
  }
  return 0.0;
}

double DistributionSpec::variance() const {
  switch (family_) {
    case Family::Normal: return params_[1] * params_[1];
    case Family::Uniform: {
      const double w = params_[1] - params_[0];
      return w * w / 12.0;
    }
    case Family::Bernoulli: return params_[0] * (1.0 - params_[0]);
    case Family::Exponential: return 1.0 / (params_[0] * params_[0]);
    case Family::PointMass: return 0.0;
  }
  return 0.0;
}

Moments moments(const DistributionSpec& spec) { return {spec.mean(), spec.variance()}; }

std::string describe(const DistributionSpec& spec) {
  std::ostringstream os;
  os << family_name(spec.family()) << '(';
  for (std::size_t i = 0; i < spec.params().size(); ++i) {
    if (i) os << ", ";
    os << format_shortest(spec.params()[i]);
  }
  os << ')';
  return os.str();
}

Engine make_engine(SeedSpec seed, std::uint64_t sub_stream) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed.master_seed), hi(seed.master_seed), lo(seed.stream_id),
                    hi(seed.stream_id),   lo(sub_stream),       hi(sub_stream)};
  return Engine(seq);
}

void draw(const DistributionSpec& spec, Engine& engine, std::span<double> out) {
  const auto& p = spec.params();
  switch (spec.family()) {
    case Family::Normal: {
      if (p[1] == 0.0) {
        std::fill(out.begin(), out.end(), p[0]);
        return;
      }
      std::normal_distribution<double> d(p[0], p[1]);
      for (double& v : out) v = d(engine);
      return;
    }
    case Family::Uniform: {
      std::uniform_real_distribution<double> d(p[0], p[1]);
      for (double& v : out) v = d(engine);
      return;
    }
    case Family::Bernoulli: {
      std::bernoulli_distribution d(p[0]);
      for (double& v : out) v = d(engine) ? 1.0 : 0.0;
      return;
    }
    case Family::Exponential: {
      std::exponential_distribution<double> d(p[0]);
      for (double& v : out) v = d(engine);
      return;
    }
    case Family::PointMass:
      std::fill(out.begin(), out.end(), p[0]);
      return;
  }
}

std::vector<double> sample(const DistributionSpec& spec, std::size_t n, SeedSpec seed) {
  if (n == 0) throw PreconditionError("sample: n must be >= 1");
  std::vector<double> out(n);
  Engine engine = make_engine(seed);
  draw(spec, engine, out);
  return out;
}

}  // namespace modelavg
