#pragma once

#include <span>
#include <vector>

#include "pcrfuse/frame.hpp"

namespace pcrfuse {

struct MassEntry {
  FocalSet set;
  double mass = 0.0;

  friend bool operator==(const MassEntry&, const MassEntry&) = default;
};

/// Tolerance on |sum - 1| accepted when validating a raw assignment.
inline constexpr double kSumTolerance = 1e-9;

/// Basic belief assignment over a frame, in canonical form: entries sorted
/// by ascending bitmask, no empty set, no zero masses, sum 1 within
/// kSumTolerance. Only validate_mass (and functions built on it) can
/// produce one.
class MassFunction {
 public:
  const Frame& frame() const { return frame_; }
  std::span<const MassEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Mass of `set`; 0 when it is not focal.
  double mass(FocalSet set) const;
  double total() const;

  friend bool operator==(const MassFunction&, const MassFunction&) = default;

 private:
  MassFunction(Frame frame, std::vector<MassEntry> entries)
      : frame_(std::move(frame)), entries_(std::move(entries)) {}

  friend MassFunction validate_mass(std::span<const MassEntry> raw,
                                    const Frame& frame);

  Frame frame_;
  std::vector<MassEntry> entries_;
};

/// Output of the conjunctive rule: partial masses on non-empty sets plus
/// the total conflict (the mass that landed on the empty set).
struct ConjunctiveResult {
  Frame frame;
  std::vector<MassEntry> masses;  // ascending bitmask, no zeros
  double conflict = 0.0;

  double mass(FocalSet set) const;
};

/// Builds a canonical MassFunction. Duplicate focal sets are summed and
/// zero entries dropped.
///
/// Errors: EmptyFocalSet, OutOfFrame, NonFiniteMass, NegativeMass,
/// NonUnitSum (|sum - 1| > 1e-9).
MassFunction validate_mass(std::span<const MassEntry> raw, const Frame& frame);

/// Total ignorance: mass 1 on Θ.
MassFunction vacuous(const Frame& frame);

/// Classical reliability discounting. Every X != Θ keeps alpha * m(X);
/// Θ receives alpha * m(Θ) + (1 - alpha). Throws AlphaOutOfRange unless
/// 0 <= alpha <= 1.
MassFunction discount(const MassFunction& m, double alpha);

/// max |m(X) - m2(X)| over the union of both focal sets.
/// Throws FrameMismatch when the frames differ.
double max_distance(const MassFunction& m, const MassFunction& m2);

/// Throws FrameMismatch unless every source shares the first one's frame.
void require_same_frame(std::span<const MassFunction> sources);

}  // namespace pcrfuse
