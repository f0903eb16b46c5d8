#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "tsc/bench.hpp"
#include "tsc/error.hpp"
#include "tsc/io.hpp"
#include "tsc/wire.hpp"

using namespace tsc;

TEST_CASE("fsdd names") {
  CorpusEntry e{"6_jackson_0", Signal({0, 1}), {}, {}, {}};
  parse_fsdd_name(e);
  CHECK(e.digit == 6);
  CHECK(e.speaker == "jackson");
  CHECK(e.take == 0);
  CorpusEntry other{"recording", Signal({0, 1}), {}, {}, {}};
  parse_fsdd_name(other);
  CHECK_FALSE(other.digit.has_value());
  CHECK(other.speaker.empty());
}

TEST_CASE("synthetic corpus looks like spoken digits") {
  const auto corpus = synthesize_corpus(20, 7);
  REQUIRE(corpus.size() == 20);
  for (const auto& e : corpus) {
    CHECK(e.signal.sample_rate_hz() == 8000.0);
    CHECK(e.signal.size() >= 2500);
    CHECK(e.signal.size() <= 4400);
    CHECK(e.digit.has_value());
    for (double v : e.signal.values()) CHECK((v >= -1.0 && v < 1.0));
  }
  CHECK(synthesize_corpus(3, 7)[1].signal == synthesize_corpus(3, 7)[1].signal);
  CHECK_THROWS_AS(synthesize_spoken_digit(10, 0, 0, 1), ParameterError);
}

TEST_CASE("compress_to_bytes fits every method") {
  const auto corpus = synthesize_corpus(3, 11);
  for (const auto& e : corpus) {
    for (Method m : {Method::Tsc, Method::Dft, Method::Paa, Method::Random}) {
      for (std::size_t budget : {64, 340, 1600}) {
        const auto r = compress_to_bytes(m, e.signal, budget, 1);
        CHECK(r.wire.size() <= budget);
        CHECK(r.reconstruction.size() == e.signal.size());
        CHECK(peek_method(r.wire) == m);
      }
    }
  }
}

TEST_CASE("bench rows and determinism") {
  const auto corpus = synthesize_corpus(4, 3);
  BenchConfig config;
  config.noise_levels = {0.0, 1.0};
  config.timing = false;
  config.jobs = 3;
  const auto a = run_bench(corpus, config);
  CHECK(a.details.size() == 4 * 4 * 4 * 2);
  CHECK(a.aggregates.size() == 4 * 4 * 2);
  for (const auto& agg : a.aggregates) CHECK(agg.count == 4);
  config.jobs = 1;
  const auto b = run_bench(corpus, config);
  std::ostringstream sa, sb;
  write_bench_csv(sa, a, false);
  write_bench_csv(sb, b, false);
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().rfind("row_type,file,digit,speaker,take,method,", 0) == 0);

  config.fractions = {1.0};
  CHECK_THROWS_AS(run_bench(corpus, config), ParameterError);
  CHECK_THROWS_AS(run_bench({}, BenchConfig{}), ParameterError);
}

TEST_CASE("corpus loading") {
  const auto dir = std::filesystem::temp_directory_path() / "tsc_bench_corpus";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CHECK_THROWS_AS(load_corpus(dir), IoError);
  write_wav(dir / "3_theo_2.wav", Signal({0, 0.5, -0.5}, 8000));
  write_csv(dir / "a.csv", std::vector<double>{1, 2, 3});
  const auto corpus = load_corpus(dir);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].name == "3_theo_2");
  CHECK(corpus[0].digit == 3);
  CHECK(corpus[1].name == "a");
  std::filesystem::remove_all(dir);
}
