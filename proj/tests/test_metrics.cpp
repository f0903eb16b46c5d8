#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tsc/error.hpp"
#include "tsc/metrics.hpp"

using namespace tsc;

TEST_CASE("approximate entropy") {
  CHECK(approx_entropy(std::vector<double>(50, 1.0), 2, 0.2) == doctest::Approx(0.0));
  std::vector<double> alt(60);
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = i % 2 ? -1.0 : 1.0;
  CHECK(std::abs(approx_entropy(alt, 2, 0.5)) < 1e-2);
  CHECK(approx_entropy(alt, 2, 0.5) == doctest::Approx(oracle::naive_apen(alt, 2, 0.5)).epsilon(1e-12));
  CHECK_THROWS_AS(approx_entropy(std::vector<double>{1, 2, 3}, 2, 0.2), ParameterError);
  CHECK_THROWS_AS(approx_entropy(alt, 0, 0.2), ParameterError);
  CHECK_THROWS_AS(approx_entropy(alt, 2, 0.0), ParameterError);
}

TEST_CASE("approximate entropy matches the double loop") {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    std::vector<double> v(200);
    for (auto& x : v) x = g(rng);
    const double r = 0.2 * sample_stddev(v);
    for (std::size_t m : {1, 2, 3}) CHECK(std::abs(approx_entropy(v, m, r) - oracle::naive_apen(v, m, r)) < 1e-9);
    CHECK(approx_entropy(v) == approx_entropy(v, 2, r));
  }
}

TEST_CASE("dtw") {
  const std::vector<double> x{1, 5, 2, 8};
  CHECK(dtw_distance(x, x) == 0.0);
  CHECK(dtw_distance(std::vector<double>{0}, std::vector<double>{3}) == 3.0);
  CHECK(dtw_distance(std::vector<double>{0, 0, 1}, std::vector<double>{0, 1}) == 0.0);
  CHECK_THROWS_AS(dtw_distance(std::vector<double>{}, x), ParameterError);

  std::mt19937_64 rng(67);
  std::normal_distribution<double> g;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      for (int t = 0; t < 20; ++t) {
        std::vector<double> a(n), b(m);
        for (auto& v : a) v = g(rng);
        for (auto& v : b) v = g(rng);
        CHECK(dtw_distance(a, b) == doctest::Approx(oracle::exhaustive_dtw(a, b)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("standardize") {
  const auto z = standardize(Signal({0, 2}));
  CHECK(z[0] == doctest::Approx(-std::sqrt(0.5)));
  CHECK(z[1] == doctest::Approx(std::sqrt(0.5)));
  std::mt19937_64 rng(71);
  const Signal s(oracle::random_distinct(rng, 300));
  const auto once = standardize(s);
  CHECK(mean(once.values()) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sample_stddev(once.values()) == doctest::Approx(1.0).epsilon(1e-12));
  const auto twice = standardize(once);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(twice[i] - once[i]) < 1e-12);
  CHECK_THROWS_AS(standardize(Signal({3, 3, 3})), DegenerateSignalError);
}

TEST_CASE("gaussian noise") {
  const Signal s(std::vector<double>(10000, 0.5));
  CHECK(add_gaussian_noise(s, 0.0, 1) == s);
  const auto n1 = add_gaussian_noise(s, 1.0, 1);
  CHECK(n1 == add_gaussian_noise(s, 1.0, 1));
  std::vector<double> diff(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) diff[i] = n1[i] - s[i];
  CHECK(std::abs(sample_stddev(diff) - 1.0) < 0.05);
  CHECK_THROWS_AS(add_gaussian_noise(s, -1.0, 1), ParameterError);
}

TEST_CASE("compression fraction") {
  CHECK(compression_fraction(100, 400) == 0.0);
  CHECK(compression_fraction(100, 40) == doctest::Approx(0.9));
  CHECK(compression_fraction(1000, 26) > 0.99);
  CHECK_THROWS_AS(compression_fraction(0, 1), ParameterError);
}
