#include "tsc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <regex>
#include <thread>

#include "tsc/baselines.hpp"
#include "tsc/error.hpp"
#include "tsc/io.hpp"
#include "tsc/metrics.hpp"
#include "tsc/simplify.hpp"
#include "tsc/wire.hpp"

namespace tsc {

namespace {

std::uint64_t fnv1a(std::string_view text, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int method_rank(Method m) { return static_cast<int>(m); }

std::size_t paa_cost(std::size_t n, std::size_t window) {
  const std::size_t count = (n + window - 1) / window;
  return kWireHeaderSize + kPointPayloadSize * count + varint_length(0) +
         (count - 1) * varint_length(window);
}

BudgetedCompression finish_points(const CompressedSignal& c, std::size_t parameter) {
  auto bytes = encode_wire(c);
  const CompressedSignal decoded = decode_wire(bytes, c.sample_rate_hz);
  Signal recon = c.method == Method::Paa ? paa_reconstruct(decoded) : reconstruct(decoded);
  return {std::move(bytes), std::move(recon), parameter};
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void parse_fsdd_name(CorpusEntry& entry) {
  static const std::regex pattern(R"(^(\d)_([A-Za-z]+)_(\d+)$)");
  std::smatch m;
  if (std::regex_match(entry.name, m, pattern)) {
    entry.digit = std::stoi(m[1].str());
    entry.speaker = m[2].str();
    entry.take = std::stoi(m[3].str());
  }
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw IoError("corpus directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::string ext = e.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".wav" || ext == ".csv") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> corpus;
  for (const auto& f : files) {
    CorpusEntry entry{f.stem().string(), read_signal(f), std::nullopt, {}, std::nullopt};
    parse_fsdd_name(entry);
    corpus.push_back(std::move(entry));
  }
  if (corpus.empty()) throw IoError("no .wav or .csv files in " + dir.string());
  return corpus;
}

BudgetedCompression compress_to_bytes(Method method, const Signal& signal, std::size_t byte_budget,
                                      std::uint64_t seed) {
  const std::size_t n = signal.size();
  switch (method) {
    case Method::Tsc: {
      const CancellationSchedule schedule(signal);
      std::size_t prefix = schedule.size();
      for (std::size_t p = 0; p <= schedule.size(); ++p) {
        if (schedule.wire_cost(p) <= byte_budget) {
          prefix = p;
          break;
        }
      }
      return finish_points(schedule.compressed(prefix), schedule.point_count(prefix));
    }
    case Method::Paa: {
      std::size_t window = n;
      for (std::size_t w = 1; w <= n; ++w) {
        if (paa_cost(n, w) <= byte_budget) {
          window = w;
          break;
        }
      }
      return finish_points(paa_compress(signal, window), window);
    }
    case Method::Random: {
      const std::size_t bound =
          byte_budget > kWireHeaderSize ? (byte_budget - kWireHeaderSize) / (1 + kPointPayloadSize) : 0;
      std::size_t k = std::clamp<std::size_t>(bound, 2, n);
      CompressedSignal c = random_compress(signal, k, seed);
      while (k > 2 && wire_cost(c) > byte_budget) c = random_compress(signal, --k, seed);
      return finish_points(c, k);
    }
    case Method::Dft: {
      const auto spectrum = real_spectrum(signal.values());
      std::vector<std::uint32_t> by_magnitude(spectrum.size());
      std::iota(by_magnitude.begin(), by_magnitude.end(), 0u);
      std::stable_sort(by_magnitude.begin(), by_magnitude.end(), [&](std::uint32_t a, std::uint32_t b) {
        return std::abs(spectrum[a]) > std::abs(spectrum[b]);
      });
      auto build = [&](std::size_t k) {
        DftCompressed c;
        c.original_length = static_cast<std::uint32_t>(n);
        c.sample_rate_hz = signal.sample_rate_hz();
        std::vector<std::uint32_t> bins(by_magnitude.begin(), by_magnitude.begin() + k);
        std::sort(bins.begin(), bins.end());
        for (std::uint32_t b : bins) c.kept.push_back({b, spectrum[b]});
        return c;
      };
      // Cost grows with k, so bisect for the largest k that fits.
      std::size_t lo = 1, hi = spectrum.size();
      while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (dft_wire_cost(build(mid)) <= byte_budget) {
          lo = mid;
        } else {
          hi = mid - 1;
        }
      }
      const DftCompressed c = build(lo);
      auto bytes = encode_dft_wire(c);
      Signal recon = dft_reconstruct(decode_dft_wire(bytes, c.sample_rate_hz));
      return {std::move(bytes), std::move(recon), lo};
    }
  }
  throw ParameterError("unknown method");
}

SummaryStat summarize(const std::vector<double>& samples) {
  SummaryStat s;
  if (samples.empty()) return s;
  s.mean = mean(samples);
  if (samples.size() > 1) {
    s.standard_error = sample_stddev(samples) / std::sqrt(static_cast<double>(samples.size()));
  }
  return s;
}

std::vector<BenchAggregate> aggregate(const std::vector<BenchDetail>& details,
                                      const BenchConfig& config) {
  std::vector<BenchAggregate> out;
  std::vector<Method> methods = config.methods;
  std::sort(methods.begin(), methods.end(),
            [](Method a, Method b) { return method_rank(a) < method_rank(b); });
  std::vector<double> fractions = config.fractions, noises = config.noise_levels;
  std::sort(fractions.begin(), fractions.end());
  std::sort(noises.begin(), noises.end());
  for (Method m : methods) {
    for (double f : fractions) {
      for (double z : noises) {
        std::vector<double> bytes, fracs, apens, dtws;
        for (const auto& d : details) {
          if (d.method != m || d.target_fraction != f || d.noise != z) continue;
          bytes.push_back(static_cast<double>(d.bytes));
          fracs.push_back(d.fraction);
          if (d.apen) apens.push_back(*d.apen);
          if (d.dtw) dtws.push_back(*d.dtw);
        }
        if (bytes.empty()) continue;
        BenchAggregate a;
        a.method = m;
        a.target_fraction = f;
        a.noise = z;
        a.count = bytes.size();
        a.bytes = summarize(bytes);
        a.fraction = summarize(fracs);
        if (!apens.empty()) a.apen = summarize(apens);
        if (!dtws.empty()) a.dtw = summarize(dtws);
        out.push_back(a);
      }
    }
  }
  return out;
}

BenchResult run_bench(const std::vector<CorpusEntry>& corpus, const BenchConfig& config) {
  if (corpus.empty()) throw ParameterError("benchmark corpus is empty");
  for (double f : config.fractions) {
    if (!(f >= 0.0 && f < 1.0)) throw ParameterError("fractions must lie in [0, 1)");
  }
  std::vector<std::vector<BenchDetail>> per_file(corpus.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      try {
        const CorpusEntry& entry = corpus[i];
        const Signal base = standardize(entry.signal);
        const std::uint64_t file_seed = mix(config.seed, fnv1a(entry.name));
        for (std::size_t zi = 0; zi < config.noise_levels.size(); ++zi) {
          const double noise = config.noise_levels[zi];
          const Signal input = add_gaussian_noise(base, noise, mix(file_seed, zi));
          for (Method method : config.methods) {
            for (std::size_t fi = 0; fi < config.fractions.size(); ++fi) {
              const double target = config.fractions[fi];
              const auto started = std::chrono::steady_clock::now();
              const auto budget = static_cast<std::size_t>(
                  std::floor((1.0 - target) * 4.0 * static_cast<double>(input.size())));
              const auto result =
                  compress_to_bytes(method, input, budget, mix(mix(file_seed, zi), 1000 + fi));
              BenchDetail d;
              d.file = entry.name;
              d.digit = entry.digit;
              d.speaker = entry.speaker;
              d.take = entry.take;
              d.method = method;
              d.target_fraction = target;
              d.noise = noise;
              d.length = input.size();
              d.target_bytes = budget;
              d.bytes = result.wire.size();
              d.fraction = compression_fraction(input, d.bytes);
              if (config.apen) d.apen = approx_entropy(result.reconstruction.values());
              if (config.dtw) d.dtw = dtw_distance(input.values(), result.reconstruction.values());
              d.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started).count();
              per_file[i].push_back(std::move(d));
            }
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(corpus.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  BenchResult result;
  for (auto& rows : per_file) {
    for (auto& r : rows) result.details.push_back(std::move(r));
  }
  std::sort(result.details.begin(), result.details.end(), [](const BenchDetail& a, const BenchDetail& b) {
    if (a.file != b.file) return a.file < b.file;
    if (a.method != b.method) return method_rank(a.method) < method_rank(b.method);
    if (a.target_fraction != b.target_fraction) return a.target_fraction < b.target_fraction;
    return a.noise < b.noise;
  });
  result.aggregates = aggregate(result.details, config);
  return result;
}

void write_bench_csv(std::ostream& out, const BenchResult& result, bool timing) {
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  out << "row_type,file,digit,speaker,take,method,target_fraction,noise,count,length,target_bytes,"
         "bytes,bytes_se,fraction,fraction_se,apen,apen_se,dtw,dtw_se,wall_ms\n";
  for (const auto& d : result.details) {
    char wall[32] = "";
    if (timing) std::snprintf(wall, sizeof wall, "%.3f", d.wall_ms);
    out << "detail," << d.file << ',' << opt_int(d.digit) << ',' << d.speaker << ',' << opt_int(d.take)
        << ',' << method_name(d.method) << ',' << format_double(d.target_fraction) << ','
        << format_double(d.noise) << ",1," << d.length << ',' << d.target_bytes << ',' << d.bytes
        << ",," << format_double(d.fraction) << ",," << opt(d.apen) << ",," << opt(d.dtw) << ",,"
        << wall << '\n';
  }
  for (const auto& a : result.aggregates) {
    out << "aggregate,,,,," << method_name(a.method) << ',' << format_double(a.target_fraction) << ','
        << format_double(a.noise) << ',' << a.count << ",,," << format_double(a.bytes.mean) << ','
        << format_double(a.bytes.standard_error) << ',' << format_double(a.fraction.mean) << ','
        << format_double(a.fraction.standard_error) << ','
        << (a.apen ? format_double(a.apen->mean) : "") << ','
        << (a.apen ? format_double(a.apen->standard_error) : "") << ','
        << (a.dtw ? format_double(a.dtw->mean) : "") << ','
        << (a.dtw ? format_double(a.dtw->standard_error) : "") << ",\n";
  }
}

}  // namespace tsc
