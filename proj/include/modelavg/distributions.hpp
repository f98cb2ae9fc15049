#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modelavg {

enum class Family { Normal, Uniform, Bernoulli, Exponential, PointMass };

std::string_view family_name(Family f);
/// Accepts the names produced by family_name ("normal", "point_mass", ...).
Family parse_family(std::string_view name);

struct Moments {
  double mean;
  double variance;
};

/// A scalar random variable from a closed list of families with exact
/// analytic moments. Parameters are validated on construction.
///
/// Parameter layouts: Normal {mean, sd}, Uniform {lo, hi}, Bernoulli {p},
/// Exponential {rate}, PointMass {c}.
class DistributionSpec {
 public:
  static DistributionSpec normal(double mean, double sd);
  static DistributionSpec uniform(double lo, double hi);
  static DistributionSpec bernoulli(double p);
  static DistributionSpec exponential(double rate);
  static DistributionSpec point_mass(double c);
  /// Generic constructor used by file loaders; throws PreconditionError on a
  /// wrong parameter count or invalid values.
  static DistributionSpec from_params(Family family, std::span<const double> params);

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] const std::vector<double>& params() const { return params_; }
  [[nodiscard]] double mean() const;
  [[nodiscard]] double variance() const;

  friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;

 private:
  DistributionSpec(Family family, std::vector<double> params);

  Family family_;
  std::vector<double> params_;
};

Moments moments(const DistributionSpec& spec);

std::string describe(const DistributionSpec& spec);

/// Identifies one reproducible random stream.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

using Engine = std::mt19937_64;

/// Engine for (master_seed, stream_id, sub_stream). Distinct triples give
/// independently seeded engines; the same triple always gives the same one.
Engine make_engine(SeedSpec seed, std::uint64_t sub_stream = 0);

/// Fills `out` with i.i.d. draws from `spec`, consuming `engine` in order.
void draw(const DistributionSpec& spec, Engine& engine, std::span<double> out);

/// n i.i.d. draws on the stream identified by `seed`.
std::vector<double> sample(const DistributionSpec& spec, std::size_t n, SeedSpec seed);

/// A distribution together with how many samples are drawn from it.
struct SampleSource {
  DistributionSpec spec = DistributionSpec::point_mass(0.0);
  std::uint64_t n = 1;
};

}  // namespace modelavg
