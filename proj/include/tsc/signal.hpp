#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace tsc {

/**
 * @brief Uniformly sampled real-valued series.
 *
 * Holds at least two finite samples. Amplitudes are kept as doubles; any
 * narrowing happens only when a compressed form is serialized.
 */
class Signal {
 public:
  explicit Signal(std::vector<double> values, double sample_rate_hz = 1.0,
                  std::int64_t start_index = 0);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double sample_rate_hz() const { return sample_rate_hz_; }
  std::int64_t start_index() const { return start_index_; }

  bool operator==(const Signal&) const = default;

 private:
  std::vector<double> values_;
  double sample_rate_hz_;
  std::int64_t start_index_;
};

enum class Method : std::uint8_t { Tsc = 0, Paa = 1, Dft = 2, Random = 3 };

std::string_view method_name(Method m);
/// Parses "tsc", "paa", "dft" or "random"; throws ParameterError otherwise.
Method parse_method(std::string_view name);

struct Point {
  std::uint32_t index = 0;
  double value = 0.0;
  bool operator==(const Point&) const = default;
};

/// Surviving (index, value) samples of a lossy compression.
struct CompressedSignal {
  std::vector<Point> points;
  std::uint32_t original_length = 0;
  double sample_rate_hz = 1.0;
  Method method = Method::Tsc;

  /// Throws ParameterError if indices are not strictly increasing, fall
  /// outside the original length, values are non-finite, or a TSC
  /// compression lacks either endpoint.
  void validate() const;

  bool operator==(const CompressedSignal&) const = default;
};

/// Target size of a compression.
struct Budget {
  enum class Kind { Bytes, Points, PersistenceThreshold, CompressionFraction };

  Kind kind = Kind::Points;
  double amount = 0.0;

  static Budget bytes(std::size_t n) { return {Kind::Bytes, static_cast<double>(n)}; }
  static Budget points(std::size_t k) { return {Kind::Points, static_cast<double>(k)}; }
  static Budget threshold(double tau) { return {Kind::PersistenceThreshold, tau}; }
  static Budget fraction(double c) { return {Kind::CompressionFraction, c}; }

  void validate() const;
};

}  // namespace tsc
