#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "modelavg/core.hpp"
#include "modelavg/distributions.hpp"
#include "modelavg/estimation.hpp"

using namespace modelavg;

TEST_CASE("empirical mean") {
  CHECK(empirical_mean(std::vector<double>{1.0, 2.0, 3.0}) == 2.0);
  CHECK(empirical_mean(std::vector<double>(17, 0.7)) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK_THROWS_AS(empirical_mean(std::vector<double>{}), PreconditionError);
  CHECK_THROWS_AS(SampleSet({}, "X"), PreconditionError);

  const SampleSet s({4.0, 6.0}, "Y");
  CHECK(s.source() == "Y");
  CHECK(empirical_mean(s) == 5.0);
}

TEST_CASE("empirical mean of 1e5 normal(1, 0.5) draws is within 0.02 of 1") {
  const SampleSet s(sample(DistributionSpec::normal(1.0, 0.5), 100000, SeedSpec{11, 0}), "X");
  CHECK(std::abs(empirical_mean(s) - 1.0) < 0.02);
}

TEST_CASE("weighted average interpolates") {
  CHECK(weighted_average(2.0, 6.0, 0.0) == 2.0);
  CHECK(weighted_average(2.0, 6.0, 1.0) == 6.0);
  CHECK(weighted_average(2.0, 6.0, 0.25) == 3.0);
  CHECK_THROWS_AS(weighted_average(2.0, 6.0, -0.01), DomainError);
  CHECK_THROWS_AS(weighted_average(2.0, 6.0, 1.01), DomainError);
  CHECK_THROWS_AS(weighted_average(2.0, 6.0, std::nan("")), DomainError);
}

TEST_CASE("shrinkage toward an anchor") {
  CHECK(shrink(5.0, 0.0, 0.2) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(shrink(5.0, 5.0, 0.9) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(shrink(-3.0, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(shrink(1.0, 0.0, 2.0), DomainError);
}

TEST_CASE("squared error") {
  CHECK(squared_error(3.0, 3.0) == 0.0);
  CHECK(squared_error(5.0, 3.0) == 4.0);
  CHECK(squared_error(-1.0, 2.0) == 9.0);
}

TEST_CASE("interpolation properties on random inputs") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> val(-100.0, 100.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = val(rng);
    const double b = val(rng);
    const double alpha = unit(rng);
    const double scale = std::abs(a) + std::abs(b);
    // Swapping the roles of local and helper sums to a + b.
    CHECK(std::abs(weighted_average(a, b, alpha) + weighted_average(b, a, alpha) - (a + b)) <=
          1e-13 * scale);
    // Shrinkage toward 0 is exactly (1 - alpha) x.
    CHECK(shrink(a, 0.0, alpha) == (1.0 - alpha) * a);
    // Monotone in alpha between the endpoints.
    const double alpha2 = std::min(1.0, alpha + 0.01 * unit(rng));
    const double w1 = weighted_average(a, b, alpha);
    const double w2 = weighted_average(a, b, alpha2);
    if (b >= a) {
      CHECK(w2 >= w1 - 1e-13 * scale);
    } else {
      CHECK(w2 <= w1 + 1e-13 * scale);
    }
    CHECK(w1 >= std::min(a, b) - 1e-13 * scale);
    CHECK(w1 <= std::max(a, b) + 1e-13 * scale);
  }
}
