#include "tsc/signal.hpp"

#include <cmath>
#include <string>

#include "tsc/error.hpp"

namespace tsc {

Signal::Signal(std::vector<double> values, double sample_rate_hz, std::int64_t start_index)
    : values_(std::move(values)), sample_rate_hz_(sample_rate_hz), start_index_(start_index) {
  if (values_.size() < 2) {
    throw InvalidSignalError("signal needs at least 2 samples, got " +
                             std::to_string(values_.size()));
  }
  if (!(sample_rate_hz_ > 0.0) || !std::isfinite(sample_rate_hz_)) {
    throw InvalidSignalError("sample rate must be positive and finite");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidSignalError("non-finite sample at index " + std::to_string(i));
    }
  }
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Tsc: return "tsc";
    case Method::Paa: return "paa";
    case Method::Dft: return "dft";
    case Method::Random: return "random";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::Tsc, Method::Paa, Method::Dft, Method::Random}) {
    if (method_name(m) == name) return m;
  }
  throw ParameterError("unknown method '" + std::string(name) + "'");
}

void CompressedSignal::validate() const {
  if (original_length == 0) throw ParameterError("original_length must be positive");
  if (!(sample_rate_hz > 0.0)) throw ParameterError("sample rate must be positive");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].index >= original_length) {
      throw ParameterError("point index " + std::to_string(points[i].index) +
                           " outside original length " + std::to_string(original_length));
    }
    if (i > 0 && points[i].index <= points[i - 1].index) {
      throw ParameterError("point indices must be strictly increasing");
    }
    if (!std::isfinite(points[i].value)) throw ParameterError("non-finite point value");
  }
  if (method == Method::Tsc) {
    if (points.empty() || points.front().index != 0 ||
        points.back().index != original_length - 1) {
      throw ParameterError("TSC compression must retain both endpoints");
    }
  }
}

void Budget::validate() const {
  if (!std::isfinite(amount) || amount < 0.0) {
    throw ParameterError("budget amount must be finite and non-negative");
  }
  switch (kind) {
    case Kind::CompressionFraction:
      if (amount >= 1.0) throw ParameterError("compression fraction must lie in [0, 1)");
      break;
    case Kind::Points:
      if (amount < 2.0 || std::floor(amount) != amount) {
        throw ParameterError("point budget must be an integer >= 2");
      }
      break;
    case Kind::Bytes:
      if (std::floor(amount) != amount) throw ParameterError("byte budget must be an integer");
      break;
    case Kind::PersistenceThreshold:
      break;
  }
}

}  // namespace tsc
