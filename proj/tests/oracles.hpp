#pragma once

// Slow, independent reference implementations used only by tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "tsc/persistence.hpp"

namespace oracle {

inline bool before(std::span<const double> v, std::size_t a, std::size_t b) {
  return v[a] < v[b] || (v[a] == v[b] && a < b);
}

/// Sublevel sweep that rebuilds the runs of included samples from scratch at
/// every step and records which run vanished.
inline tsc::PersistenceDiagram brute_diagram(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return before(v, a, b); });

  std::vector<bool> in(n, false);
  // Minimum (by sample order) of every maximal run, keyed by its left end.
  auto run_mins = [&] {
    std::vector<std::size_t> mins;
    for (std::size_t i = 0; i < n;) {
      if (!in[i]) {
        ++i;
        continue;
      }
      std::size_t best = i;
      for (; i < n && in[i]; ++i) {
        if (before(v, i, best)) best = i;
      }
      mins.push_back(best);
    }
    return mins;
  };

  tsc::PersistenceDiagram d;
  d.signal_length = n;
  for (std::size_t s : order) {
    const auto old_mins = run_mins();
    in[s] = true;
    const auto new_mins = run_mins();
    if (new_mins.size() + 1 == old_mins.size()) {
      // two runs merged at s; the one whose minimum disappeared dies
      for (std::size_t m : old_mins) {
        if (std::find(new_mins.begin(), new_mins.end(), m) == new_mins.end()) {
          d.pairs.push_back({v[m], v[s], m, s, false});
        }
      }
    }
  }
  std::size_t gmin = order.front(), gmax = order.back();
  d.pairs.push_back({v[gmin], v[gmax], gmin, gmax, true});
  std::sort(d.pairs.begin(), d.pairs.end(),
            [](const auto& a, const auto& b) { return a.min_index < b.min_index; });
  return d;
}

/// Textbook ApEn: every window compared with every window, self included.
inline double naive_apen(std::span<const double> x, std::size_t m, double r) {
  auto phi = [&](std::size_t len) {
    const std::size_t count = x.size() - len + 1;
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < count; ++j) {
        double dist = 0.0;
        for (std::size_t k = 0; k < len; ++k) dist = std::max(dist, std::abs(x[i + k] - x[j + k]));
        if (dist <= r) ++c;
      }
      sum += std::log(static_cast<double>(c) / static_cast<double>(count));
    }
    return sum / static_cast<double>(count);
  };
  return phi(m) - phi(m + 1);
}

/// Minimum over every monotone warping path, enumerated recursively.
inline double exhaustive_dtw(std::span<const double> a, std::span<const double> b) {
  double best = std::numeric_limits<double>::infinity();
  auto walk = [&](auto&& self, std::size_t i, std::size_t j, double acc) -> void {
    acc += (a[i] - b[j]) * (a[i] - b[j]);
    if (i + 1 == a.size() && j + 1 == b.size()) {
      best = std::min(best, acc);
      return;
    }
    if (i + 1 < a.size()) self(self, i + 1, j, acc);
    if (j + 1 < b.size()) self(self, i, j + 1, acc);
    if (i + 1 < a.size() && j + 1 < b.size()) self(self, i + 1, j + 1, acc);
  };
  walk(walk, 0, 0, 0.0);
  return std::sqrt(best);
}

/// O(n^2) forward transform, bins 0..n/2.
inline std::vector<std::complex<double>> direct_dft(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n / 2 + 1);
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += x[j] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j * k % n) / static_cast<double>(n));
    }
    out[k] = acc;
  }
  return out;
}

/// Random walk of length n with distinct values.
inline std::vector<double> random_distinct(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> step(0.0, 1.0);
  std::vector<double> v(n);
  double x = 0.0;
  for (auto& y : v) {
    x += step(rng);
    y = x;
  }
  return v;
}

}  // namespace oracle
