#pragma once

// Topological Signal Compression: keep the critical points of a signal and
// cancel persistence pairs, least persistent first, until a budget is met.
// Reconstruction interpolates linearly between the kept samples.
//
// Protected points are never removed: both endpoints, the global minimum and
// maximum, and the minimum of the pair killed by an interior global maximum.
// That last pair cannot be cancelled without moving the global maximum or an
// endpoint, so it is protected along with the global pair. Cancelling a pair
// whose minimum is an endpoint removes only its maximum; the endpoint stays
// and turns into a one-sided maximum.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsc/persistence.hpp"
#include "tsc/signal.hpp"

namespace tsc {

/// True if `a` is cancelled before `b`: lower persistence first; on equal
/// persistence a pair nested inside the other goes first, otherwise the
/// lower min_index does.
bool cancels_before(const PersistencePair& a, const PersistencePair& b);

/// True for the global pair and for the pair killed by an interior global maximum.
bool is_protected(const PersistencePair& pair, const PersistenceDiagram& diagram);

/// Cancellable pairs of a diagram in cancellation order.
std::vector<PersistencePair> cancellation_order(const PersistenceDiagram& diagram);

/// Sample indices removed when `pair` is cancelled (its maximum, plus its
/// minimum unless that is an endpoint).
std::vector<std::size_t> removed_points(const PersistencePair& pair, std::size_t signal_length);

/**
 * @brief Precomputed nested family of TSC compressions of one signal.
 *
 * Prefix p means the first p pairs of cancellation_order() are cancelled;
 * prefix 0 keeps every critical point. Point counts and wire costs are
 * tabulated for every prefix, so budget searches are lookups.
 */
class CancellationSchedule {
 public:
  explicit CancellationSchedule(const Signal& signal);

  const Signal& signal() const { return signal_; }
  const PersistenceDiagram& diagram() const { return diagram_; }
  std::span<const PersistencePair> order() const { return order_; }
  /// Number of cancellable pairs; prefixes run from 0 to size() inclusive.
  std::size_t size() const { return order_.size(); }

  std::size_t point_count(std::size_t prefix) const { return counts_.at(prefix); }
  std::size_t wire_cost(std::size_t prefix) const { return costs_.at(prefix); }
  std::vector<std::uint32_t> kept_indices(std::size_t prefix) const;
  CompressedSignal compressed(std::size_t prefix) const;

  /// Smallest prefix satisfying the budget; throws BudgetInfeasibleError if
  /// even the full prefix does not.
  std::size_t prefix_for(const Budget& budget) const;

 private:
  Signal signal_;
  PersistenceDiagram diagram_;
  std::vector<std::uint32_t> criticals_;
  std::vector<PersistencePair> order_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> costs_;
};

CompressedSignal simplify(const Signal& signal, const Budget& budget);

/// Removes the surviving least-persistent cancellable pair from a TSC
/// compression. The diagram must be that of the original signal.
CompressedSignal cancel_next(const CompressedSignal& compressed, const PersistenceDiagram& diagram);

/// Piecewise-linear reconstruction over the full original length. Kept
/// samples are reproduced exactly.
Signal reconstruct(const CompressedSignal& compressed);

}  // namespace tsc
