#include "tsc/baselines.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>
#include <string>

#include "tsc/error.hpp"
#include "tsc/wire.hpp"

namespace tsc {

namespace {

// FFTW's planner is not re-entrant; executing a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Plan {
 public:
  explicit Plan(fftw_plan p) : plan_(p) {
    if (!plan_) throw Error("FFTW failed to create a plan");
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  void execute() const { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

}  // namespace

CompressedSignal paa_compress(const Signal& signal, std::size_t window) {
  if (window == 0) throw ParameterError("PAA window must be positive");
  const std::size_t n = signal.size();
  if (window > n) throw ParameterError("PAA window exceeds signal length");
  CompressedSignal out;
  out.original_length = static_cast<std::uint32_t>(n);
  out.sample_rate_hz = signal.sample_rate_hz();
  out.method = Method::Paa;
  const auto v = signal.values();
  for (std::size_t start = 0; start < n; start += window) {
    const std::size_t end = std::min(n, start + window);
    const double sum = std::accumulate(v.begin() + start, v.begin() + end, 0.0);
    out.points.push_back({static_cast<std::uint32_t>(start), sum / static_cast<double>(end - start)});
  }
  return out;
}

Signal paa_reconstruct(const CompressedSignal& compressed) {
  compressed.validate();
  const auto& pts = compressed.points;
  if (pts.empty() || pts.front().index != 0) {
    throw UnderdeterminedError("PAA reconstruction needs a window starting at 0");
  }
  std::vector<double> out(compressed.original_length);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const std::size_t end = k + 1 < pts.size() ? pts[k + 1].index : compressed.original_length;
    std::fill(out.begin() + pts[k].index, out.begin() + end, pts[k].value);
  }
  return Signal(std::move(out), compressed.sample_rate_hz);
}

void DftCompressed::validate() const {
  if (original_length < 2) throw ParameterError("DFT compression needs original length >= 2");
  const std::uint32_t max_bin = original_length / 2;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i].bin > max_bin) throw ParameterError("DFT bin beyond the half spectrum");
    if (i > 0 && kept[i].bin <= kept[i - 1].bin) {
      throw ParameterError("DFT bins must be distinct and sorted");
    }
    if (!std::isfinite(kept[i].value.real()) || !std::isfinite(kept[i].value.imag())) {
      throw ParameterError("non-finite DFT coefficient");
    }
  }
}

std::vector<std::complex<double>> real_spectrum(std::span<const double> values) {
  const std::size_t n = values.size();
  const std::size_t bins = n / 2 + 1;
  std::vector<double> in(values.begin(), values.end());
  std::vector<std::complex<double>> out(bins);
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                               reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
  }
  Plan plan(raw);
  plan.execute();
  return out;
}

DftCompressed dft_compress(const Signal& signal, std::size_t k, DftSelection selection) {
  const std::size_t bins = signal.size() / 2 + 1;
  if (k < 1 || k > bins) {
    throw ParameterError("DFT coefficient count must lie in [1, " + std::to_string(bins) + "]");
  }
  const auto spectrum = real_spectrum(signal.values());
  std::vector<std::uint32_t> chosen(bins);
  std::iota(chosen.begin(), chosen.end(), 0u);
  if (selection == DftSelection::LargestMagnitude) {
    std::stable_sort(chosen.begin(), chosen.end(), [&](std::uint32_t a, std::uint32_t b) {
      return std::abs(spectrum[a]) > std::abs(spectrum[b]);
    });
  }
  chosen.resize(k);
  std::sort(chosen.begin(), chosen.end());

  DftCompressed out;
  out.original_length = static_cast<std::uint32_t>(signal.size());
  out.sample_rate_hz = signal.sample_rate_hz();
  for (std::uint32_t b : chosen) out.kept.push_back({b, spectrum[b]});
  return out;
}

Signal dft_reconstruct(const DftCompressed& compressed) {
  compressed.validate();
  const std::size_t n = compressed.original_length;
  std::vector<std::complex<double>> spectrum(n / 2 + 1);
  for (const auto& c : compressed.kept) spectrum[c.bin] = c.value;
  // A real signal has purely real DC and Nyquist bins.
  spectrum[0].imag(0.0);
  if (n % 2 == 0) spectrum[n / 2].imag(0.0);

  std::vector<double> out(n);
  fftw_plan raw;
  {
    std::lock_guard lock(planner_mutex());
    raw = fftw_plan_dft_c2r_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(spectrum.data()),
                               out.data(), FFTW_ESTIMATE);
  }
  Plan plan(raw);
  plan.execute();
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : out) v *= scale;
  return Signal(std::move(out), compressed.sample_rate_hz);
}

std::vector<std::uint8_t> encode_dft_wire(const DftCompressed& compressed) {
  compressed.validate();
  std::vector<std::uint8_t> out;
  out.reserve(dft_wire_cost(compressed));
  wire::put_header(out, {Method::Dft, compressed.original_length,
                         static_cast<std::uint32_t>(compressed.kept.size())});
  std::uint32_t prev = 0;
  for (const auto& c : compressed.kept) {
    wire::put_varint(out, c.bin - prev);
    prev = c.bin;
    const float re = static_cast<float>(c.value.real());
    const float im = static_cast<float>(c.value.imag());
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParameterError("coefficient overflows f32");
    wire::put_f32(out, re);
    wire::put_f32(out, im);
  }
  return out;
}

DftCompressed decode_dft_wire(std::span<const std::uint8_t> bytes, double sample_rate_hz) {
  wire::Reader in(bytes);
  const wire::Header h = in.header();
  if (h.method != Method::Dft) throw FormatError("not a DFT wire buffer");
  if (h.original_length < 2) throw FormatError("DFT original length below 2");
  if (h.count > h.original_length / 2 + 1) throw CorruptionError("more bins than the half spectrum");
  if (std::uint64_t{h.count} * 9 > in.remaining()) {
    throw TruncationError("declared coefficient count exceeds payload");
  }
  DftCompressed out;
  out.original_length = h.original_length;
  out.sample_rate_hz = sample_rate_hz;
  std::uint64_t bin = 0;
  for (std::uint32_t i = 0; i < h.count; ++i) {
    const std::uint32_t delta = in.varint_u32();
    if (i > 0 && delta == 0) throw CorruptionError("non-increasing DFT bin");
    bin += delta;
    if (bin > h.original_length / 2) throw CorruptionError("DFT bin beyond the half spectrum");
    const float re = in.f32();
    const float im = in.f32();
    if (!std::isfinite(re) || !std::isfinite(im)) throw CorruptionError("non-finite coefficient");
    out.kept.push_back({static_cast<std::uint32_t>(bin), {re, im}});
  }
  if (in.remaining() != 0) throw CorruptionError("trailing bytes after payload");
  return out;
}

std::size_t dft_wire_cost(const DftCompressed& compressed) {
  std::size_t total = kWireHeaderSize + 8 * compressed.kept.size();
  std::uint32_t prev = 0;
  for (const auto& c : compressed.kept) {
    total += varint_length(c.bin - prev);
    prev = c.bin;
  }
  return total;
}

CompressedSignal random_compress(const Signal& signal, std::size_t k, std::uint64_t seed) {
  const std::size_t n = signal.size();
  if (k < 2 || k > n) {
    throw ParameterError("random point count must lie in [2, " + std::to_string(n) + "]");
  }
  std::vector<std::uint32_t> interior(n - 2);
  std::iota(interior.begin(), interior.end(), 1u);
  std::vector<std::uint32_t> picked;
  picked.reserve(k);
  picked.push_back(0);
  std::mt19937_64 rng(seed);
  // Selection sampling keeps the picks in ascending order.
  std::sample(interior.begin(), interior.end(), std::back_inserter(picked), k - 2, rng);
  picked.push_back(static_cast<std::uint32_t>(n - 1));

  CompressedSignal out;
  out.original_length = static_cast<std::uint32_t>(n);
  out.sample_rate_hz = signal.sample_rate_hz();
  out.method = Method::Random;
  for (std::uint32_t idx : picked) out.points.push_back({idx, signal[idx]});
  return out;
}

}  // namespace tsc
