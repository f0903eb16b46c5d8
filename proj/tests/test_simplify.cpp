#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tsc/error.hpp"
#include "tsc/persistence.hpp"
#include "tsc/simplify.hpp"
#include "tsc/wire.hpp"

using namespace tsc;

namespace {

const Signal kEightPoint({0.0, 2.0, 3.0, 1.0, 1.5, 2.5, 0.5, 4.0});

std::vector<std::uint32_t> indices(const CompressedSignal& c) {
  std::vector<std::uint32_t> out;
  for (const auto& p : c.points) out.push_back(p.index);
  return out;
}

/// Random walk rounded to f32 so the wire format is lossless.
Signal f32_walk(std::mt19937_64& rng, std::size_t n) {
  auto v = oracle::random_distinct(rng, n);
  for (auto& x : v) x = static_cast<float>(x);
  return Signal(std::move(v));
}

std::vector<PersistencePair> surviving(const PersistenceDiagram& d, double tau) {
  std::vector<PersistencePair> out;
  for (const auto& p : d.pairs) {
    if (p.persistence() >= tau || is_protected(p, d)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("point budgets on the eight point signal") {
  CHECK(indices(simplify(kEightPoint, Budget::points(8))) == std::vector<std::uint32_t>{0, 2, 3, 5, 6, 7});
  CHECK(indices(simplify(kEightPoint, Budget::points(6))) == std::vector<std::uint32_t>{0, 2, 3, 5, 6, 7});
  CHECK(indices(simplify(kEightPoint, Budget::points(5))) == std::vector<std::uint32_t>{0, 2, 6, 7});
  CHECK(indices(simplify(kEightPoint, Budget::points(4))) == std::vector<std::uint32_t>{0, 2, 6, 7});
  CHECK(indices(simplify(kEightPoint, Budget::points(2))) == std::vector<std::uint32_t>{0, 7});
  const auto six = simplify(kEightPoint, Budget::points(6));
  CHECK(six.points[1].value == 3.0);
  CHECK(six.method == Method::Tsc);
}

TEST_CASE("cancel_next walks the schedule") {
  const auto d = compute_diagram(kEightPoint);
  const auto six = simplify(kEightPoint, Budget::points(6));
  const auto four = cancel_next(six, d);
  CHECK(four == simplify(kEightPoint, Budget::points(4)));
  const auto two = cancel_next(four, d);
  CHECK(indices(two) == std::vector<std::uint32_t>{0, 7});
  CHECK_THROWS_AS(cancel_next(two, d), NothingToCancelError);
  auto wrong = six;
  wrong.method = Method::Random;
  CHECK_THROWS_AS(cancel_next(wrong, d), ParameterError);
}

TEST_CASE("threshold budgets") {
  const Signal s({0, 2, 1, 3});
  CHECK(indices(simplify(s, Budget::threshold(1.5))) == std::vector<std::uint32_t>{0, 3});
  CHECK(indices(simplify(s, Budget::threshold(1.0))) == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(indices(simplify(s, Budget::threshold(0.0))) == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("fraction budgets round to points") {
  std::mt19937_64 rng(2);
  const Signal s = f32_walk(rng, 4000);
  const auto c = simplify(s, Budget::fraction(0.9));
  CHECK(c.points.size() <= 400);
  CHECK(c.points.size() >= 399);
}

TEST_CASE("infeasible budgets") {
  CHECK_THROWS_AS(simplify(kEightPoint, Budget::bytes(25)), BudgetInfeasibleError);
  CHECK(indices(simplify(kEightPoint, Budget::bytes(26))) == std::vector<std::uint32_t>{0, 7});
  // Interior global maximum and its partner are kept as well.
  const Signal p({0, 5, 1, 3});
  CHECK_THROWS_AS(simplify(p, Budget::points(3)), BudgetInfeasibleError);
  CHECK(indices(simplify(p, Budget::points(4))) == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK_THROWS_AS(simplify(p, Budget::bytes(30)), BudgetInfeasibleError);
}

TEST_CASE("ties cancel the nested pair first") {
  // Inner pair (2,3) and outer pair (1,4) both have persistence 2.
  PersistencePair outer{0, 2, 1, 4, false};
  PersistencePair inner{1, 3, 2, 3, false};
  CHECK(cancels_before(inner, outer));
  CHECK_FALSE(cancels_before(outer, inner));
  PersistencePair left{0, 1, 1, 2, false};
  PersistencePair right{0, 1, 5, 6, false};
  CHECK(cancels_before(left, right));
  CHECK_FALSE(cancels_before(right, left));
}

TEST_CASE("endpoint minimum loses only its maximum") {
  const Signal s({1, 2, 0, 3});
  const auto d = compute_diagram(s);
  const auto all = simplify(s, Budget::threshold(0));
  const auto next = cancel_next(all, d);
  CHECK(indices(next) == std::vector<std::uint32_t>{0, 2, 3});
  const Signal r = reconstruct(next);
  CHECK(r.values()[1] == 0.5);
  CHECK(compute_diagram(r).pairs.size() == 1);
}

TEST_CASE("reconstruct") {
  CompressedSignal c;
  c.points = {{0, 0.0}, {2, 2.0}};
  c.original_length = 3;
  CHECK(reconstruct(c) == Signal({0.0, 1.0, 2.0}));
  c.points = {{0, 0.0}};
  CHECK_THROWS_AS(reconstruct(c), UnderdeterminedError);

  std::mt19937_64 rng(9);
  const auto v = oracle::random_distinct(rng, 50);
  CompressedSignal full;
  full.original_length = 50;
  for (std::uint32_t i = 0; i < 50; ++i) full.points.push_back({i, v[i]});
  CHECK(reconstruct(full) == Signal(v));
}

TEST_CASE("reconstructed diagram drops exactly the cancelled pairs") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const Signal s = f32_walk(rng, 4 + t % 80);
    const auto d = compute_diagram(s);
    for (double tau : {0.0, 0.5, 1.0, 2.0, 4.0}) {
      const auto g = compute_diagram(reconstruct(simplify(s, Budget::threshold(tau))));
      REQUIRE(g.pairs == surviving(d, tau));
    }
  }
}

TEST_CASE("simplification is idempotent") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    const Signal s = f32_walk(rng, 10 + t);
    const auto once = simplify(s, Budget::threshold(1.0));
    const auto twice = simplify(reconstruct(once), Budget::threshold(1.0));
    CHECK(once == twice);
  }
}

TEST_CASE("kept sets are nested and cancellation is local") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const Signal s = f32_walk(rng, 20 + t);
    const auto d = compute_diagram(s);
    CompressedSignal cur = simplify(s, Budget::threshold(0));
    while (true) {
      CompressedSignal next;
      try {
        next = cancel_next(cur, d);
      } catch (const NothingToCancelError&) {
        break;
      }
      const auto a = indices(cur), b = indices(next);
      REQUIRE(std::includes(a.begin(), a.end(), b.begin(), b.end()));
      const std::size_t removed = a.size() - b.size();
      CHECK((removed == 1 || removed == 2));
      // Bracket: the kept neighbours around the removed run.
      std::vector<std::uint32_t> gone;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(gone));
      const auto lo = *std::prev(std::lower_bound(b.begin(), b.end(), gone.front()));
      const auto hi = *std::upper_bound(b.begin(), b.end(), gone.back());
      const auto ra = reconstruct(cur), rb = reconstruct(next);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i <= lo || i >= hi) REQUIRE(ra[i] == rb[i]);
      }
      cur = next;
    }
  }
}

TEST_CASE("byte budgets are tight") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const Signal s = f32_walk(rng, 500 + 37 * t);
    const CancellationSchedule schedule(s);
    for (std::size_t budget : {64, 128, 340, 1024}) {
      const auto c = simplify(s, Budget::bytes(budget));
      const auto bytes = encode_wire(c);
      CHECK(bytes.size() <= budget);
      const auto p = schedule.prefix_for(Budget::bytes(budget));
      CHECK(schedule.wire_cost(p) == bytes.size());
      if (p > 0) CHECK(schedule.wire_cost(p - 1) > budget);
    }
  }
}

TEST_CASE("schedule tables agree with direct computation") {
  std::mt19937_64 rng(47);
  const Signal s = f32_walk(rng, 300);
  const CancellationSchedule schedule(s);
  for (std::size_t p = 0; p <= schedule.size(); ++p) {
    const auto c = schedule.compressed(p);
    CHECK(c.points.size() == schedule.point_count(p));
    CHECK(encode_wire(c).size() == schedule.wire_cost(p));
    if (p > 0) CHECK(schedule.point_count(p) < schedule.point_count(p - 1));
  }
}

TEST_CASE("low-amplitude noise does not move persistent features") {
  std::mt19937_64 rng(53);
  std::normal_distribution<double> noise(0.0, 0.01);
  std::vector<double> base(400), noisy(400);
  for (std::size_t i = 0; i < base.size(); ++i) {
    base[i] = std::sin(static_cast<double>(i) * 0.05) * 3.0 + static_cast<double>(i) * 0.001;
    noisy[i] = base[i] + noise(rng);
  }
  const auto a = simplify(Signal(base), Budget::threshold(1.0));
  const auto b = simplify(Signal(noisy), Budget::threshold(1.0));
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    CHECK(std::abs(static_cast<int>(a.points[i].index) - static_cast<int>(b.points[i].index)) <= 15);
  }
}
