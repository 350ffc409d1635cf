#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "pcrfuse/conjunctive.hpp"
#include "pcrfuse/pcr.hpp"

namespace pcrfuse {

/// Importance of a source expressed as an integer repetition count.
struct WeightedSource {
  MassFunction mass;
  std::uint64_t weight = 1;
};

enum class FusionRule { conjunctive, pcr5, pcr6 };

std::string_view to_string(FusionRule rule) noexcept;

/// Divides every weight by the gcd of the whole list.
/// Errors: EmptySourceList, ZeroWeight.
std::vector<std::uint64_t> reduce_weights(std::span<const std::uint64_t> weights);

/// Flat source list with each source repeated `weight` times after gcd
/// reduction. Errors: EmptySourceList, ZeroWeight, TooFewSources (fewer
/// than two after expansion), TooManySources.
std::vector<MassFunction> expand_weighted(std::span<const WeightedSource> sources,
                                          FusionLimits limits = {});

using FusionOutput = std::variant<MassFunction, ConjunctiveResult>;

/// Repeated fusion: reduce the weights, expand, fuse by `rule`. The
/// conjunctive rule yields a ConjunctiveResult, the PCR rules a
/// MassFunction. Errors: those of expand_weighted plus FrameMismatch.
FusionOutput fuse_with_importance(std::span<const WeightedSource> sources,
                                  FusionRule rule, FusionLimits limits = {});

struct ProfilePoint {
  std::size_t k = 0;
  MassFunction fused;
  double distance = 0.0;  // max_distance(fused, repeated)
};

/// Fuses [base, repeated x k] for k = 1..k_max and reports how far each
/// result is from `repeated`. k is used as given, without gcd reduction.
/// Errors: FrameMismatch, InvalidArgument (k_max == 0), TooManySources
/// (k_max + 1 > limits.max_sources).
std::vector<ProfilePoint> convergence_profile(const MassFunction& base,
                                              const MassFunction& repeated,
                                              PcrRule rule, std::size_t k_max,
                                              FusionLimits limits = {});

}  // namespace pcrfuse
