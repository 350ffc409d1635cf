#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "pcrfuse/mass.hpp"

namespace pcrfuse::detail {

/// Collects (focal set, value) contributions and sums each bucket in
/// ascending value order, so the totals depend only on the multiset of
/// contributions and not on the order they arrived in.
class CanonicalAccumulator {
 public:
  void add(FocalSet set, double value) { items_.emplace_back(set, value); }

  /// Buckets in ascending bitmask order. The empty set is kept if it
  /// received anything.
  std::vector<MassEntry> totals() const {
    auto items = items_;
    std::sort(items.begin(), items.end());
    std::vector<MassEntry> out;
    for (const auto& [set, value] : items) {
      if (!out.empty() && out.back().set == set) {
        out.back().mass += value;
      } else {
        out.push_back({set, value});
      }
    }
    return out;
  }

 private:
  std::vector<std::pair<FocalSet, double>> items_;
};

/// Product of `values` taken in ascending order.
inline double ordered_product(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double p = 1.0;
  for (double v : values) p *= v;
  return p;
}

/// Visits every tuple of focal entries, one per source, in lexicographic
/// order of the per-source entry index (source 0 varies slowest). `visit`
/// receives a span of pointers to the chosen entries.
template <typename Visitor>
void for_each_tuple(std::span<const MassFunction> sources, Visitor&& visit) {
  const std::size_t s = sources.size();
  if (s == 0) return;
  for (const auto& src : sources) {
    if (src.size() == 0) return;
  }
  std::vector<std::size_t> index(s, 0);
  std::vector<const MassEntry*> picked(s);
  for (;;) {
    for (std::size_t i = 0; i < s; ++i) picked[i] = &sources[i].entries()[index[i]];
    visit(std::span<const MassEntry* const>(picked));
    std::size_t pos = s;
    while (pos > 0) {
      --pos;
      if (++index[pos] < sources[pos].size()) break;
      index[pos] = 0;
      if (pos == 0) return;
    }
  }
}

inline FocalSet joint_intersection(std::span<const MassEntry* const> tuple) {
  FocalSet acc = tuple.front()->set;
  for (const auto* e : tuple.subspan(1)) acc = acc & e->set;
  return acc;
}

inline double tuple_product(std::span<const MassEntry* const> tuple) {
  std::vector<double> masses;
  masses.reserve(tuple.size());
  for (const auto* e : tuple) masses.push_back(e->mass);
  return ordered_product(std::move(masses));
}

}  // namespace pcrfuse::detail
