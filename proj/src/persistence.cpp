#include "tsc/persistence.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "tsc/error.hpp"

namespace tsc {

namespace {

constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n, kAbsent), oldest_(n, kAbsent) {}

  bool contains(std::size_t i) const { return parent_[i] != kAbsent; }

  void make(std::size_t i) {
    parent_[i] = i;
    oldest_[i] = i;
  }

  std::size_t find(std::size_t i) {
    std::size_t root = i;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[i] != root) {
      const std::size_t next = parent_[i];
      parent_[i] = root;
      i = next;
    }
    return root;
  }

  /// Attaches the root `child` below `root`.
  void attach(std::size_t child, std::size_t root) { parent_[child] = root; }

  std::size_t oldest(std::size_t root) const { return oldest_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> oldest_;  // birth sample of each component, valid at roots
};

}  // namespace

std::vector<CriticalPoint> critical_points(std::span<const double> v) {
  const std::size_t n = v.size();
  std::vector<CriticalPoint> out;
  if (n < 2) return out;
  out.push_back({0, sample_less(v, 0, 1) ? CriticalKind::Min : CriticalKind::Max});
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const bool below_left = sample_less(v, i, i - 1);
    const bool below_right = sample_less(v, i, i + 1);
    if (below_left && below_right) {
      out.push_back({i, CriticalKind::Min});
    } else if (!below_left && !below_right) {
      out.push_back({i, CriticalKind::Max});
    }
  }
  out.push_back({n - 1, sample_less(v, n - 1, n - 2) ? CriticalKind::Min : CriticalKind::Max});
  return out;
}

std::vector<CriticalPoint> critical_points(const Signal& signal) {
  return critical_points(signal.values());
}

PersistenceDiagram compute_diagram(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n < 2) throw InvalidSignalError("persistence needs at least 2 samples");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sample_less(v, a, b); });

  PersistenceDiagram diagram;
  diagram.signal_length = n;
  DisjointSets sets(n);
  for (std::size_t i : order) {
    const bool left = i > 0 && sets.contains(i - 1);
    const bool right = i + 1 < n && sets.contains(i + 1);
    sets.make(i);
    if (!left && !right) continue;  // a minimum starts a component
    if (left != right) {
      sets.attach(i, sets.find(left ? i - 1 : i + 1));
      continue;
    }
    // Interior maximum: the younger component dies here.
    std::size_t a = sets.find(i - 1);
    std::size_t b = sets.find(i + 1);
    if (sample_less(v, sets.oldest(b), sets.oldest(a))) std::swap(a, b);
    const std::size_t younger = sets.oldest(b);
    diagram.pairs.push_back({v[younger], v[i], younger, i, false});
    sets.attach(b, a);
    sets.attach(i, a);
  }
  const std::size_t gmin = order.front();
  const std::size_t gmax = order.back();
  diagram.pairs.push_back({v[gmin], v[gmax], gmin, gmax, true});
  std::sort(diagram.pairs.begin(), diagram.pairs.end(),
            [](const PersistencePair& a, const PersistencePair& b) { return a.min_index < b.min_index; });
  return diagram;
}

PersistenceDiagram compute_diagram(const Signal& signal) { return compute_diagram(signal.values()); }

const PersistencePair& PersistenceDiagram::global_pair() const {
  for (const auto& p : pairs) {
    if (p.is_global) return p;
  }
  throw InvalidSignalError("persistence diagram has no global pair");
}

const PersistencePair* PersistenceDiagram::global_max_pair() const {
  const std::size_t gmax = global_pair().max_index;
  for (const auto& p : pairs) {
    if (!p.is_global && p.max_index == gmax) return &p;
  }
  return nullptr;
}

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& diagram) {
  std::vector<PersistencePair> rows = diagram.pairs;
  std::stable_sort(rows.begin(), rows.end(), [](const PersistencePair& a, const PersistencePair& b) {
    if (a.persistence() != b.persistence()) return a.persistence() > b.persistence();
    return a.min_index < b.min_index;
  });
  const auto precision = out.precision(17);
  out << "birth,death,min_index,max_index,is_global\n";
  for (const auto& p : rows) {
    out << p.birth << ',' << p.death << ',' << p.min_index << ',' << p.max_index << ','
        << (p.is_global ? 1 : 0) << '\n';
  }
  out.precision(precision);
}

}  // namespace tsc
