#pragma once

// Zero-dimensional sublevel persistence of a sampled 1-D signal.
//
// Samples are compared by (value, index) lexicographically, so equal values
// behave as if the later sample were infinitesimally higher. Under that
// total order every signal has distinct values: a plateau rises from left to
// right, which makes its leftmost sample the representative of a minimum and
// its rightmost sample the representative of a maximum.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "tsc/signal.hpp"

namespace tsc {

/// Strict (value, index) order on samples.
inline bool sample_less(std::span<const double> v, std::size_t a, std::size_t b) {
  return v[a] < v[b] || (v[a] == v[b] && a < b);
}

enum class CriticalKind { Min, Max };

struct CriticalPoint {
  std::size_t index = 0;
  CriticalKind kind = CriticalKind::Min;
  bool operator==(const CriticalPoint&) const = default;
};

/// Local extrema including both endpoints; kinds alternate.
std::vector<CriticalPoint> critical_points(std::span<const double> values);
std::vector<CriticalPoint> critical_points(const Signal& signal);

struct PersistencePair {
  double birth = 0.0;
  double death = 0.0;
  std::size_t min_index = 0;
  std::size_t max_index = 0;
  bool is_global = false;

  double persistence() const { return death - birth; }
  bool operator==(const PersistencePair&) const = default;
};

/**
 * @brief Zero-dimensional persistence diagram D0(f).
 *
 * One pair per local minimum. Every minimum but the global one is killed by
 * the interior maximum at which its component merges into an older one. The
 * global minimum is paired with the global maximum. When the global maximum
 * is interior it also kills a component, so its index then appears in two
 * pairs: the global pair and the pair returned by global_max_pair().
 *
 * Pairs are ordered by min_index.
 */
struct PersistenceDiagram {
  std::vector<PersistencePair> pairs;
  std::size_t signal_length = 0;

  const PersistencePair& global_pair() const;
  /// Non-global pair killed by the global maximum, if that maximum is interior.
  const PersistencePair* global_max_pair() const;

  bool operator==(const PersistenceDiagram&) const = default;
};

PersistenceDiagram compute_diagram(std::span<const double> values);
PersistenceDiagram compute_diagram(const Signal& signal);

/// CSV with header birth,death,min_index,max_index,is_global; rows sorted by
/// persistence descending, then min_index.
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram);

}  // namespace tsc
