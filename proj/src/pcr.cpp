#include "pcrfuse/pcr.hpp"

#include <algorithm>
#include <string>

#include "detail/enumeration.hpp"
#include "pcrfuse/conjunctive.hpp"
#include "pcrfuse/error.hpp"

namespace pcrfuse {
namespace {

void check_sources(std::span<const MassFunction> sources, const FusionLimits& limits) {
  if (sources.empty()) {
    throw Error(ErrorKind::EmptySourceList, "fusion needs at least one source");
  }
  if (sources.size() > limits.max_sources) {
    throw Error(ErrorKind::TooManySources,
                std::to_string(sources.size()) + " sources exceed the cap of " +
                    std::to_string(limits.max_sources));
  }
  require_same_frame(sources);
}

template <typename Sink>
void for_each_conflict(std::span<const MassFunction> sources, Sink&& sink) {
  ConflictTuple tuple;
  detail::for_each_tuple(sources, [&](std::span<const MassEntry* const> picked) {
    if (!detail::joint_intersection(picked).empty()) return;
    const double product = detail::tuple_product(picked);
    if (product == 0.0) return;
    tuple.members.clear();
    for (std::size_t i = 0; i < picked.size(); ++i) {
      tuple.members.push_back({i, picked[i]->set, picked[i]->mass});
    }
    tuple.product = product;
    sink(tuple);
  });
}

MassFunction combine(const ConjunctiveResult& conjunctive,
                     const detail::CanonicalAccumulator& redistributed) {
  detail::CanonicalAccumulator total;
  for (const auto& e : conjunctive.masses) total.add(e.set, e.mass);
  for (const auto& e : redistributed.totals()) total.add(e.set, e.mass);
  // Per set the bucket holds at most {conjunctive, redistributed}; the sum
  // of two values does not depend on their order.
  return validate_mass(total.totals(), conjunctive.frame);
}

}  // namespace

std::string_view to_string(PcrRule rule) noexcept {
  return rule == PcrRule::pcr5 ? "pcr5" : "pcr6";
}

double ShareVector::total() const {
  double sum = 0.0;
  for (const auto& e : shares) sum += e.mass;
  return sum;
}

double ShareVector::share(FocalSet set) const {
  for (const auto& e : shares) {
    if (e.set == set) return e.mass;
  }
  return 0.0;
}

std::vector<MassEntry> group_weights(const ConflictTuple& tuple, PcrRule rule) {
  std::vector<std::pair<FocalSet, double>> items;
  items.reserve(tuple.members.size());
  for (const auto& m : tuple.members) items.emplace_back(m.set, m.mass);
  std::sort(items.begin(), items.end());

  std::vector<MassEntry> weights;
  for (const auto& [set, mass] : items) {
    if (!weights.empty() && weights.back().set == set) {
      if (rule == PcrRule::pcr5) {
        weights.back().mass *= mass;
      } else {
        weights.back().mass += mass;
      }
    } else {
      weights.push_back({set, mass});
    }
  }
  return weights;
}

ShareVector pcr_shares(const ConflictTuple& tuple, PcrRule rule) {
  auto weights = group_weights(tuple, rule);
  double denominator = 0.0;
  for (const auto& w : weights) denominator += w.mass;
  ShareVector out;
  out.shares.reserve(weights.size());
  for (const auto& w : weights) {
    out.shares.push_back({w.set, tuple.product * w.mass / denominator});
  }
  return out;
}

ShareVector pcr5_shares(const ConflictTuple& tuple) {
  return pcr_shares(tuple, PcrRule::pcr5);
}

ShareVector pcr6_shares(const ConflictTuple& tuple) {
  return pcr_shares(tuple, PcrRule::pcr6);
}

std::vector<ConflictTuple> enumerate_conflict_tuples(
    std::span<const MassFunction> sources) {
  if (sources.empty()) {
    throw Error(ErrorKind::EmptySourceList, "no sources to enumerate");
  }
  require_same_frame(sources);
  std::vector<ConflictTuple> out;
  for_each_conflict(sources, [&](const ConflictTuple& t) { out.push_back(t); });
  return out;
}

MassFunction fuse_pcr(std::span<const MassFunction> sources, PcrRule rule,
                      FusionLimits limits) {
  check_sources(sources, limits);
  if (sources.size() == 1) return sources.front();

  const ConjunctiveResult conjunctive = conjunctive_combine(sources);
  detail::CanonicalAccumulator redistributed;
  for_each_conflict(sources, [&](const ConflictTuple& t) {
    for (const auto& share : pcr_shares(t, rule).shares) {
      redistributed.add(share.set, share.mass);
    }
  });
  return combine(conjunctive, redistributed);
}

MassFunction fuse_pcr5(std::span<const MassFunction> sources, FusionLimits limits) {
  return fuse_pcr(sources, PcrRule::pcr5, limits);
}

MassFunction fuse_pcr6(std::span<const MassFunction> sources, FusionLimits limits) {
  return fuse_pcr(sources, PcrRule::pcr6, limits);
}

double RedistributionTrace::redistributed(FocalSet set) const {
  double sum = 0.0;
  for (const auto& entry : entries) sum += entry.shares.share(set);
  return sum;
}

RedistributionTrace trace(std::span<const MassFunction> sources, PcrRule rule,
                          FusionLimits limits) {
  check_sources(sources, limits);
  std::vector<TraceEntry> entries;
  if (sources.size() > 1) {
    for_each_conflict(sources, [&](const ConflictTuple& t) {
      entries.push_back({t, rule, group_weights(t, rule), pcr_shares(t, rule)});
    });
  }
  return RedistributionTrace{rule, conjunctive_combine(sources), std::move(entries),
                             fuse_pcr(sources, rule, limits)};
}

}  // namespace pcrfuse
