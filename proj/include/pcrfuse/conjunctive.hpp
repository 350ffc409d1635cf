#pragma once

#include <span>

#include "pcrfuse/mass.hpp"

namespace pcrfuse {

/// Conjunctive rule over any number of sources. Every tuple of focal sets
/// (one per source) sends its mass product to the joint intersection;
/// empty intersections accumulate into `conflict`.
///
/// Contributions are bucketed per focal set and each bucket is summed in
/// ascending value order, so the result is bit-identical under any
/// permutation of `sources`.
///
/// Errors: EmptySourceList, FrameMismatch.
ConjunctiveResult conjunctive_combine(std::span<const MassFunction> sources);

/// Dempster's normalization: divides every partial mass by (1 - conflict).
/// Throws TotalConflict when the conflict is 1 within 1e-12.
MassFunction dempster_normalize(const ConjunctiveResult& result);

}  // namespace pcrfuse
