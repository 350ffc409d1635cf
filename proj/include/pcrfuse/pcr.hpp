#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pcrfuse/mass.hpp"

namespace pcrfuse {

enum class PcrRule { pcr5, pcr6 };

std::string_view to_string(PcrRule rule) noexcept;

/// Upper bound on the number of sources a fusion may enumerate over.
/// Enumeration is O(prod |F_i|); exceeding the cap is an error, never a
/// silent truncation.
struct FusionLimits {
  std::size_t max_sources = 12;
};

struct TupleMember {
  std::size_t source = 0;
  FocalSet set;
  double mass = 0.0;
};

/// One focal set per source whose joint intersection is empty, with a
/// strictly positive product.
struct ConflictTuple {
  std::vector<TupleMember> members;
  /// Product of the member masses, multiplied in ascending mass order.
  double product = 0.0;
};

/// Portion of one tuple's conflict handed to each focal set involved.
/// Entries in ascending bitmask order; they sum to the tuple product.
struct ShareVector {
  std::vector<MassEntry> shares;

  double total() const;
  double share(FocalSet set) const;
};

/// Grouped proportionality weight per distinct focal set in a tuple.
/// PCR5 multiplies the masses of repeated sets, PCR6 adds them.
std::vector<MassEntry> group_weights(const ConflictTuple& tuple, PcrRule rule);

/// All conflicting tuples in lexicographic order of per-source bitmask
/// (source 0 varies slowest). Errors: EmptySourceList, FrameMismatch.
std::vector<ConflictTuple> enumerate_conflict_tuples(
    std::span<const MassFunction> sources);

ShareVector pcr5_shares(const ConflictTuple& tuple);
ShareVector pcr6_shares(const ConflictTuple& tuple);
ShareVector pcr_shares(const ConflictTuple& tuple, PcrRule rule);

/// Conjunctive masses plus every conflicting tuple's shares.
/// Errors: EmptySourceList, FrameMismatch, TooManySources.
MassFunction fuse_pcr(std::span<const MassFunction> sources, PcrRule rule,
                      FusionLimits limits = {});
MassFunction fuse_pcr5(std::span<const MassFunction> sources,
                       FusionLimits limits = {});
MassFunction fuse_pcr6(std::span<const MassFunction> sources,
                       FusionLimits limits = {});

/// Direct evaluation of the three-source closed-form sums, independent of
/// tuple enumeration. Grouped weights are products (PCR5) or sums (PCR6);
/// see pcr.cpp for the exact terms. Throws FrameMismatch.
MassFunction closed_form_pcr5_3(const MassFunction& m1, const MassFunction& m2,
                                const MassFunction& m3);
MassFunction closed_form_pcr6_3(const MassFunction& m1, const MassFunction& m2,
                                const MassFunction& m3);

struct TraceEntry {
  ConflictTuple tuple;
  PcrRule rule = PcrRule::pcr5;
  std::vector<MassEntry> weights;
  ShareVector shares;
};

/// Term-level record of a PCR fusion: one entry per conflicting tuple, in
/// enumeration order. conjunctive + column sums of the shares == fused.
struct RedistributionTrace {
  PcrRule rule = PcrRule::pcr5;
  ConjunctiveResult conjunctive;
  std::vector<TraceEntry> entries;
  MassFunction fused;

  /// Sum of every entry's share for `set`, in entry order.
  double redistributed(FocalSet set) const;
};

RedistributionTrace trace(std::span<const MassFunction> sources, PcrRule rule,
                          FusionLimits limits = {});

}  // namespace pcrfuse
