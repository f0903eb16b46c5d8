// tsc: command-line front end for topological signal compression.
//
// Exit codes: 0 success, 1 data error, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tsc/baselines.hpp"
#include "tsc/bench.hpp"
#include "tsc/error.hpp"
#include "tsc/io.hpp"
#include "tsc/metrics.hpp"
#include "tsc/persistence.hpp"
#include "tsc/simplify.hpp"
#include "tsc/wire.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CompressOptions {
  std::string method = "tsc";
  std::optional<std::size_t> bytes, points, coeffs, window;
  std::optional<double> threshold, fraction;
  std::string dft_select = "largest";
  std::uint64_t seed = 1;
  double rate = 1.0;
  std::string input, output;
};

struct ReconstructOptions {
  std::optional<double> rate;
  std::string input, output;
};

struct DiagramOptions {
  std::string input, output;
};

struct BenchOptions {
  std::string corpus;
  std::size_t synthetic = 0;
  std::vector<std::string> methods{"tsc", "dft", "paa", "random"};
  std::vector<double> fractions{0.5, 0.9, 0.95, 0.99};
  std::vector<double> noise{0.0};
  std::uint64_t seed = 1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string output;
  bool no_apen = false, no_dtw = false, no_timing = false;
};

struct SynthOptions {
  std::string output;
  std::size_t count = 50;
  std::uint64_t seed = 7;
};

std::string ext_of(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

int count_set(std::initializer_list<bool> flags) {
  int n = 0;
  for (bool f : flags) n += f ? 1 : 0;
  return n;
}

void report(const std::string& method, std::size_t bytes, std::size_t length, const std::string& extra) {
  std::printf("method=%s bytes=%zu fraction=%.6f length=%zu %s\n", method.c_str(), bytes,
              tsc::compression_fraction(length, bytes), length, extra.c_str());
}

int run_compress(const CompressOptions& o) {
  const tsc::Method method = [&] {
    try {
      return tsc::parse_method(o.method);
    } catch (const tsc::ParameterError& e) {
      throw UsageError(e.what());
    }
  }();
  const tsc::Signal signal = tsc::read_signal(o.input, o.rate);
  const std::size_t n = signal.size();
  const bool b = o.bytes.has_value(), p = o.points.has_value(), t = o.threshold.has_value(),
             f = o.fraction.has_value(), c = o.coeffs.has_value(), w = o.window.has_value();

  std::vector<std::uint8_t> wire;
  std::string extra;
  switch (method) {
    case tsc::Method::Tsc: {
      if (count_set({b, p, t, f}) != 1 || c || w) {
        throw UsageError("tsc needs exactly one of --bytes, --points, --threshold, --fraction");
      }
      tsc::Budget budget = b ? tsc::Budget::bytes(*o.bytes)
                         : p ? tsc::Budget::points(*o.points)
                         : t ? tsc::Budget::threshold(*o.threshold)
                             : tsc::Budget::fraction(*o.fraction);
      const auto compressed = tsc::simplify(signal, budget);
      wire = tsc::encode_wire(compressed);
      extra = "points=" + std::to_string(compressed.points.size());
      break;
    }
    case tsc::Method::Paa: {
      if (count_set({b, w, f}) != 1 || p || t || c) {
        throw UsageError("paa needs exactly one of --window, --bytes, --fraction");
      }
      std::size_t window = 0;
      if (b) {
        auto r = tsc::compress_to_bytes(method, signal, *o.bytes, o.seed);
        wire = std::move(r.wire);
        window = r.parameter;
      } else {
        window = w ? *o.window
                   : static_cast<std::size_t>(std::max(1.0, std::round(1.0 / (1.0 - *o.fraction))));
        if (f && !(*o.fraction >= 0.0 && *o.fraction < 1.0)) throw tsc::ParameterError("fraction must lie in [0, 1)");
        wire = tsc::encode_wire(tsc::paa_compress(signal, std::min(window, n)));
      }
      extra = "window=" + std::to_string(window);
      break;
    }
    case tsc::Method::Dft: {
      if (count_set({b, c}) != 1 || p || t || f || w) {
        throw UsageError("dft needs exactly one of --coeffs, --bytes");
      }
      std::size_t k = 0;
      if (b) {
        if (o.dft_select != "largest") throw UsageError("--bytes supports --dft-select largest only");
        auto r = tsc::compress_to_bytes(method, signal, *o.bytes, o.seed);
        wire = std::move(r.wire);
        k = r.parameter;
      } else {
        tsc::DftSelection sel;
        if (o.dft_select == "largest") {
          sel = tsc::DftSelection::LargestMagnitude;
        } else if (o.dft_select == "first") {
          sel = tsc::DftSelection::FirstK;
        } else {
          throw UsageError("--dft-select must be 'largest' or 'first'");
        }
        k = *o.coeffs;
        wire = tsc::encode_dft_wire(tsc::dft_compress(signal, k, sel));
      }
      extra = "coeffs=" + std::to_string(k);
      break;
    }
    case tsc::Method::Random: {
      if (count_set({b, p, f}) != 1 || t || c || w) {
        throw UsageError("random needs exactly one of --points, --bytes, --fraction");
      }
      std::size_t k = 0;
      if (b) {
        auto r = tsc::compress_to_bytes(method, signal, *o.bytes, o.seed);
        wire = std::move(r.wire);
        k = r.parameter;
      } else {
        if (f && !(*o.fraction >= 0.0 && *o.fraction < 1.0)) throw tsc::ParameterError("fraction must lie in [0, 1)");
        k = p ? *o.points
              : std::max<std::size_t>(2, static_cast<std::size_t>(
                                             std::round((1.0 - *o.fraction) * static_cast<double>(n))));
        wire = tsc::encode_wire(tsc::random_compress(signal, k, o.seed));
      }
      extra = "points=" + std::to_string(k);
      break;
    }
  }
  if (b && wire.size() > *o.bytes) {
    throw tsc::BudgetInfeasibleError("smallest " + o.method + " encoding needs " +
                                     std::to_string(wire.size()) + " bytes, budget is " +
                                     std::to_string(*o.bytes));
  }
  tsc::write_bytes(o.output, wire);
  report(o.method, wire.size(), n, extra);
  return 0;
}

int run_reconstruct(const ReconstructOptions& o) {
  const bool wav = ext_of(o.output) == ".wav";
  if (wav && !o.rate) throw UsageError("WAV output needs --rate (the wire format omits it)");
  const double rate = o.rate.value_or(1.0);
  const auto bytes = tsc::read_bytes(o.input);
  const tsc::Method method = tsc::peek_method(bytes);
  std::optional<tsc::Signal> out;
  switch (method) {
    case tsc::Method::Dft:
      out = tsc::dft_reconstruct(tsc::decode_dft_wire(bytes, rate));
      break;
    case tsc::Method::Paa:
      out = tsc::paa_reconstruct(tsc::decode_wire(bytes, rate));
      break;
    case tsc::Method::Tsc:
    case tsc::Method::Random:
      out = tsc::reconstruct(tsc::decode_wire(bytes, rate));
      break;
  }
  if (wav) {
    tsc::write_wav(o.output, *out);
  } else {
    tsc::write_csv(o.output, out->values());
  }
  return 0;
}

int run_diagram(const DiagramOptions& o) {
  const auto diagram = tsc::compute_diagram(tsc::read_signal(o.input));
  if (o.output.empty()) {
    tsc::write_diagram_csv(std::cout, diagram);
  } else {
    std::ofstream out(o.output);
    if (!out) throw tsc::IoError("cannot write " + o.output);
    tsc::write_diagram_csv(out, diagram);
  }
  return 0;
}

int run_bench(const BenchOptions& o) {
  if (o.corpus.empty() == (o.synthetic == 0)) {
    throw UsageError("bench needs exactly one of --corpus DIR or --synthetic N");
  }
  tsc::BenchConfig config;
  config.methods.clear();
  for (const auto& m : o.methods) {
    try {
      config.methods.push_back(tsc::parse_method(m));
    } catch (const tsc::ParameterError& e) {
      throw UsageError(e.what());
    }
  }
  config.fractions = o.fractions;
  config.noise_levels = o.noise;
  config.seed = o.seed;
  config.jobs = o.jobs;
  config.apen = !o.no_apen;
  config.dtw = !o.no_dtw;
  config.timing = !o.no_timing;

  const auto corpus = o.synthetic > 0 ? tsc::synthesize_corpus(o.synthetic, o.seed) : tsc::load_corpus(o.corpus);
  const auto result = tsc::run_bench(corpus, config);
  if (o.output.empty()) {
    tsc::write_bench_csv(std::cout, result, config.timing);
  } else {
    std::ofstream out(o.output);
    if (!out) throw tsc::IoError("cannot write " + o.output);
    tsc::write_bench_csv(out, result, config.timing);
  }
  std::fprintf(stderr, "bench: %zu files, %zu detail rows, %zu aggregate rows\n", corpus.size(),
               result.details.size(), result.aggregates.size());
  return 0;
}

int run_synth(const SynthOptions& o) {
  std::filesystem::create_directories(o.output);
  for (const auto& entry : tsc::synthesize_corpus(o.count, o.seed)) {
    tsc::write_wav(std::filesystem::path(o.output) / (entry.name + ".wav"), entry.signal);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological signal compression and baseline compressors"};
  app.require_subcommand(1);

  CompressOptions co;
  auto* compress = app.add_subcommand("compress", "Compress a WAV/CSV signal to a wire file");
  compress->add_option("--method", co.method, "tsc | paa | dft | random")->capture_default_str();
  compress->add_option("--bytes", co.bytes, "Byte budget for the whole file");
  compress->add_option("--points", co.points, "Point budget (tsc, random)");
  compress->add_option("--threshold", co.threshold, "Cancel pairs with persistence below this (tsc)");
  compress->add_option("--fraction", co.fraction, "Compression fraction over point count (tsc, paa, random)");
  compress->add_option("--coeffs", co.coeffs, "Number of DFT coefficients (dft)");
  compress->add_option("--window", co.window, "PAA window length (paa)");
  compress->add_option("--dft-select", co.dft_select, "largest | first")->capture_default_str();
  compress->add_option("--seed", co.seed, "Seed for random compression")->capture_default_str();
  compress->add_option("--rate", co.rate, "Sample rate assumed for CSV input")->capture_default_str();
  compress->add_option("input", co.input, "Input .wav or .csv")->required();
  compress->add_option("output", co.output, "Output wire file")->required();

  ReconstructOptions ro;
  auto* recon = app.add_subcommand("reconstruct", "Decode a wire file to CSV or WAV");
  recon->add_option("--rate", ro.rate, "Sample rate for WAV output");
  recon->add_option("input", ro.input, "Wire file")->required();
  recon->add_option("output", ro.output, "Output .csv or .wav")->required();

  DiagramOptions dopt;
  auto* diag = app.add_subcommand("diagram", "Print the persistence diagram as CSV");
  diag->add_option("input", dopt.input, "Input .wav or .csv")->required();
  diag->add_option("-o,--out", dopt.output, "Write CSV here instead of stdout");

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "Sweep a corpus over methods, fractions and noise levels");
  bench->add_option("--corpus", bo.corpus, "Directory of .wav/.csv files");
  bench->add_option("--synthetic", bo.synthetic, "Use N synthetic spoken digits instead of a corpus");
  bench->add_option("--methods", bo.methods, "Methods to run")->delimiter(',')->capture_default_str();
  bench->add_option("--fractions", bo.fractions, "Target compression fractions")->delimiter(',')->capture_default_str();
  bench->add_option("--noise", bo.noise, "Gaussian noise multiples")->delimiter(',')->capture_default_str();
  bench->add_option("--seed", bo.seed, "Seed for noise and random compression")->capture_default_str();
  bench->add_option("--jobs", bo.jobs, "Worker threads")->capture_default_str();
  bench->add_option("-o,--out", bo.output, "Write CSV here instead of stdout");
  bench->add_flag("--no-apen", bo.no_apen, "Skip approximate entropy");
  bench->add_flag("--no-dtw", bo.no_dtw, "Skip DTW distance");
  bench->add_flag("--no-timing", bo.no_timing, "Leave wall_ms empty so output is byte-reproducible");

  SynthOptions so;
  auto* synth = app.add_subcommand("synth", "Write a synthetic FSDD-style corpus of WAV files");
  synth->add_option("-o,--out", so.output, "Output directory")->required();
  synth->add_option("--count", so.count, "Number of recordings")->capture_default_str();
  synth->add_option("--seed", so.seed, "Generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compress->parsed()) return run_compress(co);
    if (recon->parsed()) return run_reconstruct(ro);
    if (diag->parsed()) return run_diagram(dopt);
    if (bench->parsed()) return run_bench(bo);
    if (synth->parsed()) return run_synth(so);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
