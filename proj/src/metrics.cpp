#include "tsc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "tsc/error.hpp"

namespace tsc {

double approx_entropy(std::span<const double> x, std::size_t m, double r) {
  const std::size_t n = x.size();
  if (m == 0) throw ParameterError("ApEn embedding length must be positive");
  if (n <= m + 1) throw ParameterError("signal too short for ApEn");
  if (!(r > 0.0)) throw ParameterError("ApEn tolerance must be positive");

  // count_m[i]: windows of length m within r of window i (self included);
  // count_m1 likewise for length m+1. Both are symmetric in (i, j), so only
  // j > i is visited.
  const std::size_t wm = n - m + 1;
  const std::size_t wm1 = n - m;
  std::vector<std::size_t> count_m(wm, 1), count_m1(wm1, 1);
  for (std::size_t i = 0; i < wm; ++i) {
    for (std::size_t j = i + 1; j < wm; ++j) {
      bool close = true;
      for (std::size_t k = 0; k < m; ++k) {
        if (std::abs(x[i + k] - x[j + k]) > r) {
          close = false;
          break;
        }
      }
      if (!close) continue;
      ++count_m[i];
      ++count_m[j];
      if (j < wm1 && std::abs(x[i + m] - x[j + m]) <= r) {
        ++count_m1[i];
        ++count_m1[j];
      }
    }
  }
  auto phi = [](const std::vector<std::size_t>& counts) {
    const double total = static_cast<double>(counts.size());
    double sum = 0.0;
    for (std::size_t c : counts) sum += std::log(static_cast<double>(c) / total);
    return sum / total;
  };
  return phi(count_m) - phi(count_m1);
}

double approx_entropy(std::span<const double> values) {
  const double sd = sample_stddev(values);
  // A constant signal is perfectly regular; any positive radius gives 0.
  return approx_entropy(values, 2, sd > 0.0 ? 0.2 * sd : 1.0);
}

double dtw_distance(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw ParameterError("DTW needs non-empty inputs");
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(b.size() + 1, inf), cur(b.size() + 1, inf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = inf;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const double d = a[i - 1] - b[j - 1];
      cur[j] = d * d + std::min({prev[j - 1], prev[j], cur[j - 1]});
    }
    std::swap(prev, cur);
  }
  return std::sqrt(prev[b.size()]);
}

double mean(std::span<const double> values) {
  if (values.empty()) throw ParameterError("mean of empty sequence");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_stddev(std::span<const double> values) {
  if (values.size() < 2) throw ParameterError("standard deviation needs 2 values");
  const double mu = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

Signal standardize(const Signal& signal) {
  const auto v = signal.values();
  const double mu = mean(v);
  const double sd = sample_stddev(v);
  if (!(sd > 0.0)) throw DegenerateSignalError("cannot standardize a constant signal");
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [&](double x) { return (x - mu) / sd; });
  return Signal(std::move(out), signal.sample_rate_hz(), signal.start_index());
}

Signal add_gaussian_noise(const Signal& signal, double noise_multiple, std::uint64_t seed) {
  if (!(noise_multiple >= 0.0) || !std::isfinite(noise_multiple)) {
    throw ParameterError("noise multiple must be finite and non-negative");
  }
  if (noise_multiple == 0.0) return signal;
  std::vector<double> out(signal.values().begin(), signal.values().end());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, noise_multiple);
  for (double& v : out) v += noise(rng);
  return Signal(std::move(out), signal.sample_rate_hz(), signal.start_index());
}

double compression_fraction(std::size_t original_length, std::size_t payload_bytes) {
  if (original_length == 0) throw ParameterError("original length must be positive");
  return 1.0 - static_cast<double>(payload_bytes) / (4.0 * static_cast<double>(original_length));
}

double compression_fraction(const Signal& original, std::size_t payload_bytes) {
  return compression_fraction(original.size(), payload_bytes);
}

}  // namespace tsc
