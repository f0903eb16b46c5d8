#include "tsc/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsc/error.hpp"
#include "tsc/wire.hpp"

namespace tsc {

namespace {

struct Span {
  std::size_t lo, hi;
};

Span span_of(const PersistencePair& p) {
  return {std::min(p.min_index, p.max_index), std::max(p.min_index, p.max_index)};
}

bool nested_in(const PersistencePair& inner, const PersistencePair& outer) {
  const Span a = span_of(inner), b = span_of(outer);
  return b.lo <= a.lo && a.hi <= b.hi && (a.lo != b.lo || a.hi != b.hi);
}

}  // namespace

bool cancels_before(const PersistencePair& a, const PersistencePair& b) {
  if (a.persistence() != b.persistence()) return a.persistence() < b.persistence();
  // Equal persistence can hide a nested pair (same birth and death values).
  // The inner one must go first or the outer pair is not adjacent yet.
  if (nested_in(a, b)) return true;
  if (nested_in(b, a)) return false;
  return a.min_index < b.min_index;
}

bool is_protected(const PersistencePair& pair, const PersistenceDiagram& diagram) {
  return pair.is_global || pair.max_index == diagram.global_pair().max_index;
}

std::vector<PersistencePair> cancellation_order(const PersistenceDiagram& diagram) {
  std::vector<PersistencePair> order;
  order.reserve(diagram.pairs.size());
  for (const auto& p : diagram.pairs) {
    if (!is_protected(p, diagram)) order.push_back(p);
  }
  std::sort(order.begin(), order.end(), cancels_before);
  return order;
}

std::vector<std::size_t> removed_points(const PersistencePair& pair, std::size_t signal_length) {
  std::vector<std::size_t> out;
  if (pair.min_index != 0 && pair.min_index + 1 != signal_length) out.push_back(pair.min_index);
  out.push_back(pair.max_index);
  return out;
}

CancellationSchedule::CancellationSchedule(const Signal& signal)
    : signal_(signal), diagram_(compute_diagram(signal)), order_(cancellation_order(diagram_)) {
  const std::size_t n = signal_.size();
  for (const CriticalPoint& c : critical_points(signal_)) {
    criticals_.push_back(static_cast<std::uint32_t>(c.index));
  }

  // Walk the prefixes on a linked list of kept samples, tracking count and cost.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> prev(n, kNone), next(n, kNone);
  for (std::size_t i = 0; i < criticals_.size(); ++i) {
    if (i > 0) prev[criticals_[i]] = criticals_[i - 1];
    if (i + 1 < criticals_.size()) next[criticals_[i]] = criticals_[i + 1];
  }
  std::size_t count = criticals_.size();
  std::size_t cost = kWireHeaderSize + kPointPayloadSize * count + varint_length(0);
  for (std::size_t i = 1; i < criticals_.size(); ++i) {
    cost += varint_length(criticals_[i] - criticals_[i - 1]);
  }
  counts_.push_back(count);
  costs_.push_back(cost);
  for (const PersistencePair& pair : order_) {
    for (std::size_t idx : removed_points(pair, n)) {
      // Removed points are never endpoints, so both neighbours exist.
      const std::size_t l = prev[idx], r = next[idx];
      cost -= varint_length(idx - l) + varint_length(r - idx) + kPointPayloadSize;
      cost += varint_length(r - l);
      next[l] = r;
      prev[r] = l;
      --count;
    }
    counts_.push_back(count);
    costs_.push_back(cost);
  }
}

std::vector<std::uint32_t> CancellationSchedule::kept_indices(std::size_t prefix) const {
  if (prefix > order_.size()) throw ParameterError("cancellation prefix out of range");
  std::vector<bool> removed(signal_.size(), false);
  for (std::size_t k = 0; k < prefix; ++k) {
    for (std::size_t idx : removed_points(order_[k], signal_.size())) removed[idx] = true;
  }
  std::vector<std::uint32_t> kept;
  kept.reserve(counts_[prefix]);
  for (std::uint32_t idx : criticals_) {
    if (!removed[idx]) kept.push_back(idx);
  }
  return kept;
}

CompressedSignal CancellationSchedule::compressed(std::size_t prefix) const {
  CompressedSignal out;
  out.original_length = static_cast<std::uint32_t>(signal_.size());
  out.sample_rate_hz = signal_.sample_rate_hz();
  out.method = Method::Tsc;
  for (std::uint32_t idx : kept_indices(prefix)) out.points.push_back({idx, signal_[idx]});
  return out;
}

std::size_t CancellationSchedule::prefix_for(const Budget& budget) const {
  budget.validate();
  const std::size_t last = order_.size();
  switch (budget.kind) {
    case Budget::Kind::PersistenceThreshold: {
      std::size_t p = 0;
      while (p < last && order_[p].persistence() < budget.amount) ++p;
      return p;
    }
    case Budget::Kind::Points:
    case Budget::Kind::CompressionFraction: {
      double k = budget.amount;
      if (budget.kind == Budget::Kind::CompressionFraction) {
        k = std::round((1.0 - budget.amount) * static_cast<double>(signal_.size()));
      }
      // counts_ is non-increasing in the prefix.
      const auto it = std::find_if(counts_.begin(), counts_.end(),
                                   [&](std::size_t c) { return static_cast<double>(c) <= k; });
      if (it == counts_.end()) {
        throw BudgetInfeasibleError("point budget " + std::to_string(static_cast<long long>(k)) +
                                    " is below the " + std::to_string(counts_.back()) +
                                    " protected points");
      }
      return static_cast<std::size_t>(it - counts_.begin());
    }
    case Budget::Kind::Bytes: {
      const auto it = std::find_if(costs_.begin(), costs_.end(),
                                   [&](std::size_t c) { return static_cast<double>(c) <= budget.amount; });
      if (it == costs_.end()) {
        throw BudgetInfeasibleError("byte budget " + std::to_string(static_cast<long long>(budget.amount)) +
                                    " is below the minimal encoding of " +
                                    std::to_string(costs_.back()) + " bytes");
      }
      return static_cast<std::size_t>(it - costs_.begin());
    }
  }
  throw ParameterError("unknown budget kind");
}

CompressedSignal simplify(const Signal& signal, const Budget& budget) {
  const CancellationSchedule schedule(signal);
  return schedule.compressed(schedule.prefix_for(budget));
}

CompressedSignal cancel_next(const CompressedSignal& compressed, const PersistenceDiagram& diagram) {
  compressed.validate();
  if (compressed.method != Method::Tsc) throw ParameterError("cancel_next needs a TSC compression");
  if (compressed.original_length != diagram.signal_length) {
    throw ParameterError("diagram does not match the compressed signal's length");
  }
  std::vector<bool> kept(diagram.signal_length, false);
  for (const Point& p : compressed.points) kept[p.index] = true;

  for (const PersistencePair& pair : cancellation_order(diagram)) {
    const auto removed = removed_points(pair, diagram.signal_length);
    if (!std::all_of(removed.begin(), removed.end(), [&](std::size_t i) { return kept[i]; })) {
      continue;
    }
    CompressedSignal out = compressed;
    std::erase_if(out.points, [&](const Point& p) {
      return std::find(removed.begin(), removed.end(), p.index) != removed.end();
    });
    return out;
  }
  throw NothingToCancelError("only protected pairs remain");
}

Signal reconstruct(const CompressedSignal& compressed) {
  const auto& pts = compressed.points;
  if (pts.size() < 2) throw UnderdeterminedError("reconstruction needs at least 2 points");
  if (pts.front().index != 0 || pts.back().index + 1 != compressed.original_length) {
    throw UnderdeterminedError("reconstruction needs both endpoints");
  }
  std::vector<double> out(compressed.original_length);
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const Point a = pts[k], b = pts[k + 1];
    if (b.index <= a.index) throw ParameterError("point indices must be strictly increasing");
    const double span = static_cast<double>(b.index - a.index);
    out[a.index] = a.value;
    for (std::uint32_t i = a.index + 1; i < b.index; ++i) {
      out[i] = a.value + (b.value - a.value) * (static_cast<double>(i - a.index) / span);
    }
  }
  out[pts.back().index] = pts.back().value;
  return Signal(std::move(out), compressed.sample_rate_hz);
}

}  // namespace tsc
