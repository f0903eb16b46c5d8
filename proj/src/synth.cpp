#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "tsc/bench.hpp"
#include "tsc/error.hpp"

namespace tsc {

namespace {

constexpr double kRate = 8000.0;

struct Formants {
  double f1, f2, f3;
};

// Adult male averages (Hz).
constexpr Formants kI{270, 2290, 3010};
constexpr Formants kIh{390, 1990, 2550};
constexpr Formants kEh{530, 1840, 2480};
constexpr Formants kAa{730, 1090, 2440};
constexpr Formants kAo{570, 840, 2410};
constexpr Formants kUh{440, 1020, 2240};
constexpr Formants kUw{300, 870, 2240};
constexpr Formants kAh{640, 1190, 2390};
constexpr Formants kEr{490, 1350, 1690};
constexpr Formants kNasal{250, 1700, 2600};
constexpr Formants kFric{2500, 3300, 3800};
constexpr Formants kSib{3000, 3500, 3900};

enum class Source { Voiced, Noise, Burst, Nasal };

struct Phone {
  Source source;
  Formants from, to;
  double weight;     // relative duration
  double amplitude;  // relative level
};

using Plan = std::vector<Phone>;

const std::array<Plan, 10>& digit_plans() {
  static const std::array<Plan, 10> plans = {{
      // zero
      {{Source::Noise, kSib, kSib, 0.8, 0.25}, {Source::Voiced, kIh, kEr, 1.0, 0.9},
       {Source::Voiced, kEr, kAo, 0.8, 1.0}, {Source::Voiced, kAo, kUh, 1.2, 0.8}},
      // one
      {{Source::Voiced, kUw, kAh, 0.8, 0.8}, {Source::Voiced, kAh, kAh, 1.4, 1.0},
       {Source::Nasal, kNasal, kNasal, 0.9, 0.4}},
      // two
      {{Source::Burst, kFric, kFric, 0.3, 0.5}, {Source::Voiced, kUw, kUw, 2.0, 1.0}},
      // three
      {{Source::Noise, kFric, kFric, 0.8, 0.15}, {Source::Voiced, kEr, kI, 0.7, 0.8},
       {Source::Voiced, kI, kI, 1.5, 1.0}},
      // four
      {{Source::Noise, kFric, kFric, 0.8, 0.15}, {Source::Voiced, kAo, kAo, 1.4, 1.0},
       {Source::Voiced, kAo, kEr, 0.9, 0.8}},
      // five
      {{Source::Noise, kFric, kFric, 0.7, 0.15}, {Source::Voiced, kAa, kI, 1.8, 1.0},
       {Source::Voiced, kI, kUw, 0.5, 0.5}},
      // six
      {{Source::Noise, kSib, kSib, 1.0, 0.3}, {Source::Voiced, kIh, kIh, 1.0, 1.0},
       {Source::Burst, kFric, kFric, 0.3, 0.4}, {Source::Noise, kSib, kSib, 1.0, 0.3}},
      // seven
      {{Source::Noise, kSib, kSib, 0.9, 0.3}, {Source::Voiced, kEh, kEh, 1.0, 1.0},
       {Source::Voiced, kUw, kAh, 0.6, 0.6}, {Source::Voiced, kAh, kAh, 0.7, 0.7},
       {Source::Nasal, kNasal, kNasal, 0.7, 0.4}},
      // eight
      {{Source::Voiced, kEh, kI, 1.8, 1.0}, {Source::Burst, kFric, kFric, 0.3, 0.4}},
      // nine
      {{Source::Nasal, kNasal, kNasal, 0.6, 0.4}, {Source::Voiced, kAa, kI, 1.8, 1.0},
       {Source::Nasal, kNasal, kNasal, 0.8, 0.4}},
  }};
  return plans;
}

struct Voice {
  double pitch_hz;
  double formant_scale;
  double breathiness;
};

constexpr std::array<Voice, 6> kVoices = {{
    {118, 1.00, 0.04}, {104, 0.96, 0.06}, {132, 1.04, 0.03},
    {96, 0.94, 0.08}, {142, 1.07, 0.05}, {112, 0.98, 0.04},
}};

/// Two-pole resonator with unit gain at its centre frequency.
class Resonator {
 public:
  double step(double x, double freq, double bandwidth) {
    freq = std::min(freq, 0.45 * kRate);
    const double r = std::exp(-std::numbers::pi * bandwidth / kRate);
    const double c = 2.0 * r * std::cos(2.0 * std::numbers::pi * freq / kRate);
    const double gain = (1.0 - r) * std::sqrt(1.0 - c + r * r);
    const double y = gain * x + c * y1_ - r * r * y2_;
    y2_ = y1_;
    y1_ = y;
    return y;
  }

 private:
  double y1_ = 0.0, y2_ = 0.0;
};

}  // namespace

const std::vector<std::string>& synthetic_speakers() {
  static const std::vector<std::string> names = {"jackson", "nicolas", "theo", "yweweler", "george", "lucas"};
  return names;
}

Signal synthesize_spoken_digit(int digit, int speaker, int take, std::uint64_t seed) {
  if (digit < 0 || digit > 9) throw ParameterError("digit must lie in 0..9");
  if (speaker < 0 || speaker >= static_cast<int>(kVoices.size())) throw ParameterError("unknown speaker");
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(digit) << 40) ^
                      (static_cast<std::uint64_t>(speaker) << 32) ^ static_cast<std::uint64_t>(take));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const Voice voice = kVoices[speaker];
  const Plan& plan = digit_plans()[digit];
  const double duration = 0.32 + 0.22 * unit(rng);
  const auto n = static_cast<std::size_t>(duration * kRate);
  const double pitch = voice.pitch_hz * (0.92 + 0.16 * unit(rng));

  double total_weight = 0.0;
  for (const Phone& p : plan) total_weight += p.weight;

  std::array<Resonator, 3> tract;
  double phase = 0.0;
  double tilt = 0.0;
  std::vector<double> out(n);
  const double attack = 0.012 * kRate, release = 0.05 * kRate;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n);
    // Locate the phone and the position inside it.
    double acc = 0.0;
    std::size_t k = 0;
    while (k + 1 < plan.size() && (acc + plan[k].weight) / total_weight <= t) acc += plan[k++].weight;
    const Phone& ph = plan[k];
    const double u = std::clamp((t * total_weight - acc) / ph.weight, 0.0, 1.0);

    Formants f{ph.from.f1 + (ph.to.f1 - ph.from.f1) * u, ph.from.f2 + (ph.to.f2 - ph.from.f2) * u,
               ph.from.f3 + (ph.to.f3 - ph.from.f3) * u};
    const double s = voice.formant_scale;
    f.f1 *= s;
    f.f2 *= s;
    f.f3 *= s;

    double excitation = 0.0;
    switch (ph.source) {
      case Source::Voiced:
      case Source::Nasal: {
        // Falling intonation with a little jitter; differentiated glottal pulse.
        const double f0 = pitch * (1.12 - 0.3 * t) * (1.0 + 0.01 * gauss(rng));
        phase += f0 / kRate;
        if (phase >= 1.0) phase -= 1.0;
        const double open = 0.6;
        const double g = phase < open ? std::sin(std::numbers::pi * phase / open) : 0.0;
        const double pulse = g - tilt;
        tilt = g;
        excitation = pulse * 20.0 + voice.breathiness * gauss(rng);
        break;
      }
      case Source::Noise:
        excitation = 2.0 * gauss(rng);
        break;
      case Source::Burst:
        excitation = u < 0.35 ? 4.0 * gauss(rng) : 0.1 * gauss(rng);
        break;
    }
    const bool nasal = ph.source == Source::Nasal;
    double y = tract[0].step(excitation, f.f1, nasal ? 100.0 : 80.0);
    y += 0.6 * tract[1].step(excitation, f.f2, 120.0);
    y += 0.35 * tract[2].step(excitation, f.f3, 180.0);

    const double x = static_cast<double>(i);
    const double env = std::min({1.0, x / attack, (static_cast<double>(n) - x) / release});
    out[i] = y * ph.amplitude * env;
  }

  double peak = 0.0;
  for (double v : out) peak = std::max(peak, std::abs(v));
  const double level = (0.35 + 0.5 * unit(rng)) / (peak > 0.0 ? peak : 1.0);
  for (double& v : out) {
    // Room noise floor, then 16-bit quantization like a recorded WAV.
    const double noisy = v * level + 3e-4 * gauss(rng);
    v = std::round(std::clamp(noisy, -1.0, 32767.0 / 32768.0) * 32768.0) / 32768.0;
  }
  return Signal(std::move(out), kRate);
}

std::vector<CorpusEntry> synthesize_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<CorpusEntry> corpus;
  corpus.reserve(count);
  const auto& speakers = synthetic_speakers();
  for (std::size_t i = 0; i < count; ++i) {
    const int digit = static_cast<int>(i % 10);
    const int speaker = static_cast<int>((i / 10) % speakers.size());
    const int take = static_cast<int>(i / (10 * speakers.size()));
    CorpusEntry entry{std::to_string(digit) + "_" + speakers[speaker] + "_" + std::to_string(take),
                      synthesize_spoken_digit(digit, speaker, take, seed), digit, speakers[speaker], take};
    corpus.push_back(std::move(entry));
  }
  std::sort(corpus.begin(), corpus.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  return corpus;
}

}  // namespace tsc
