#pragma once

// Counterfactual lossy compressors: piecewise aggregate approximation,
// Fourier coefficient selection, and random subsampling.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsc/signal.hpp"

namespace tsc {

/// One mean per window, stored at the window's first index. The last window
/// may be short.
CompressedSignal paa_compress(const Signal& signal, std::size_t window);
/// Piecewise-constant expansion; each window runs to the next stored index.
Signal paa_reconstruct(const CompressedSignal& compressed);

struct DftCoefficient {
  std::uint32_t bin = 0;
  std::complex<double> value;
  bool operator==(const DftCoefficient&) const = default;
};

/// Subset of the half spectrum (bins 0..n/2) of a real signal. Coefficients
/// are unnormalized forward-transform values, sorted by bin.
struct DftCompressed {
  std::vector<DftCoefficient> kept;
  std::uint32_t original_length = 0;
  double sample_rate_hz = 1.0;

  void validate() const;
  bool operator==(const DftCompressed&) const = default;
};

enum class DftSelection { LargestMagnitude, FirstK };

/// Forward real transform, bins 0..n/2.
std::vector<std::complex<double>> real_spectrum(std::span<const double> values);

/// Keeps k of the n/2+1 half-spectrum bins. Largest magnitude breaks ties
/// toward the lower bin.
DftCompressed dft_compress(const Signal& signal, std::size_t k,
                           DftSelection selection = DftSelection::LargestMagnitude);
/// Inverse transform with every dropped bin zeroed.
Signal dft_reconstruct(const DftCompressed& compressed);

/// Same header as the point format with method tag 2; each coefficient is a
/// LEB128 bin delta followed by real and imaginary parts as f32.
std::vector<std::uint8_t> encode_dft_wire(const DftCompressed& compressed);
DftCompressed decode_dft_wire(std::span<const std::uint8_t> bytes, double sample_rate_hz = 1.0);
std::size_t dft_wire_cost(const DftCompressed& compressed);

/// Both endpoints plus k-2 interior samples drawn uniformly without
/// replacement. Deterministic for a given seed.
CompressedSignal random_compress(const Signal& signal, std::size_t k, std::uint64_t seed);

}  // namespace tsc
