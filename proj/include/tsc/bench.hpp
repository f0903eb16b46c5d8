#pragma once

// Corpus sweep: every file is standardized, optionally noised, compressed by
// each method to a byte budget, decoded, reconstructed and scored.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tsc/signal.hpp"

namespace tsc {

struct CorpusEntry {
  std::string name;  // file stem
  Signal signal;
  // Parsed from FSDD-style names "{digit}_{speaker}_{take}".
  std::optional<int> digit;
  std::string speaker;
  std::optional<int> take;
};

/// Fills the label fields from an FSDD-style stem; leaves them empty otherwise.
void parse_fsdd_name(CorpusEntry& entry);

/// Loads every .wav and .csv file in `dir`, sorted by file name. Throws
/// IoError if nothing readable is found.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

/// Result of compressing one signal to fit a byte budget.
struct BudgetedCompression {
  std::vector<std::uint8_t> wire;
  Signal reconstruction;
  std::size_t parameter = 0;  // points, coefficients or window
};

/// Largest TSC/DFT/random payload, or finest PAA window, that fits in
/// `byte_budget`. When even the coarsest setting does not fit, the coarsest
/// is returned and its size exceeds the budget. The reconstruction is decoded
/// from the wire bytes, so it reflects f32 quantization.
BudgetedCompression compress_to_bytes(Method method, const Signal& signal, std::size_t byte_budget,
                                      std::uint64_t seed);

struct BenchConfig {
  std::vector<Method> methods{Method::Tsc, Method::Dft, Method::Paa, Method::Random};
  std::vector<double> fractions{0.5, 0.9, 0.95, 0.99};
  std::vector<double> noise_levels{0.0};
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool apen = true;
  bool dtw = true;
  bool timing = true;
};

struct BenchDetail {
  std::string file;
  std::optional<int> digit;
  std::string speaker;
  std::optional<int> take;
  Method method = Method::Tsc;
  double target_fraction = 0.0;
  double noise = 0.0;
  std::size_t length = 0;
  std::size_t target_bytes = 0;
  std::size_t bytes = 0;
  double fraction = 0.0;
  std::optional<double> apen;
  std::optional<double> dtw;
  double wall_ms = 0.0;
};

struct SummaryStat {
  double mean = 0.0;
  double standard_error = 0.0;  // sample sd / sqrt(count); 0 for one sample
};

struct BenchAggregate {
  Method method = Method::Tsc;
  double target_fraction = 0.0;
  double noise = 0.0;
  std::size_t count = 0;
  SummaryStat bytes;
  SummaryStat fraction;
  std::optional<SummaryStat> apen;
  std::optional<SummaryStat> dtw;
};

struct BenchResult {
  std::vector<BenchDetail> details;        // sorted by file, method, fraction, noise
  std::vector<BenchAggregate> aggregates;  // sorted by method, fraction, noise
};

SummaryStat summarize(const std::vector<double>& samples);

BenchResult run_bench(const std::vector<CorpusEntry>& corpus, const BenchConfig& config);

/// Aggregates recomputed from detail rows; run_bench uses this too.
std::vector<BenchAggregate> aggregate(const std::vector<BenchDetail>& details,
                                      const BenchConfig& config);

void write_bench_csv(std::ostream& out, const BenchResult& result, bool timing = true);

// Synthetic FSDD-like recordings, used when the real dataset is unavailable.

/// Speaker names used by synthesize_corpus, indexed by speaker id.
const std::vector<std::string>& synthetic_speakers();

/// One 8 kHz "spoken digit": a glottal pulse train or noise source shaped by
/// three time-varying formant resonators, following a per-digit phone plan,
/// quantized to 16-bit levels.
Signal synthesize_spoken_digit(int digit, int speaker, int take, std::uint64_t seed);

/// `count` entries cycling through digits and speakers, named like FSDD files.
std::vector<CorpusEntry> synthesize_corpus(std::size_t count, std::uint64_t seed);

}  // namespace tsc
