#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "tsc/signal.hpp"

namespace tsc {

/// Approximate entropy ApEn(m, r) with Chebyshev window distance and
/// self-matches counted. Requires size > m + 1 and r > 0.
double approx_entropy(std::span<const double> values, std::size_t m, double r);

/// ApEn with m = 2 and r = 0.2 times the sample standard deviation.
double approx_entropy(std::span<const double> values);

/// Unconstrained DTW with squared-difference local cost; returns the square
/// root of the optimal accumulated cost.
double dtw_distance(std::span<const double> a, std::span<const double> b);

double mean(std::span<const double> values);
/// Standard deviation with the n-1 denominator.
double sample_stddev(std::span<const double> values);

/// Zero mean and unit sample standard deviation. Throws
/// DegenerateSignalError for constant input.
Signal standardize(const Signal& signal);

/// Adds i.i.d. N(0, noise_multiple^2) draws. On a standardized signal the
/// multiple is the noise level relative to the signal's own spread.
Signal add_gaussian_noise(const Signal& signal, double noise_multiple, std::uint64_t seed);

/// 1 - payload / raw, with raw = 4 bytes per original sample.
double compression_fraction(const Signal& original, std::size_t payload_bytes);
double compression_fraction(std::size_t original_length, std::size_t payload_bytes);

}  // namespace tsc
