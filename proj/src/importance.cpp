#include "pcrfuse/importance.hpp"

#include <numeric>
#include <string>

#include "pcrfuse/error.hpp"

namespace pcrfuse {

std::string_view to_string(FusionRule rule) noexcept {
  switch (rule) {
    case FusionRule::conjunctive: return "conjunctive";
    case FusionRule::pcr5: return "pcr5";
    case FusionRule::pcr6: return "pcr6";
  }
  return "unknown";
}

std::vector<std::uint64_t> reduce_weights(std::span<const std::uint64_t> weights) {
  if (weights.empty()) {
    throw Error(ErrorKind::EmptySourceList, "no weights to reduce");
  }
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) {
      throw Error(ErrorKind::ZeroWeight,
                  "weight of source " + std::to_string(i + 1) + " is zero");
    }
    g = std::gcd(g, weights[i]);
  }
  std::vector<std::uint64_t> out(weights.begin(), weights.end());
  for (auto& w : out) w /= g;
  return out;
}

std::vector<MassFunction> expand_weighted(std::span<const WeightedSource> sources,
                                          FusionLimits limits) {
  std::vector<std::uint64_t> raw;
  raw.reserve(sources.size());
  for (const auto& s : sources) raw.push_back(s.weight);
  const auto weights = reduce_weights(raw);

  std::uint64_t total = 0;
  for (auto w : weights) {
    // Compare before adding so huge weights cannot wrap around.
    if (w > limits.max_sources || total + w > limits.max_sources) {
      throw Error(ErrorKind::TooManySources,
                  "expanded source count exceeds the cap of " +
                      std::to_string(limits.max_sources));
    }
    total += w;
  }
  if (total < 2) {
    throw Error(ErrorKind::TooFewSources,
                "repeated fusion needs at least two sources after expansion");
  }

  std::vector<MassFunction> flat;
  flat.reserve(total);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::uint64_t r = 0; r < weights[i]; ++r) flat.push_back(sources[i].mass);
  }
  return flat;
}

FusionOutput fuse_with_importance(std::span<const WeightedSource> sources,
                                  FusionRule rule, FusionLimits limits) {
  const auto flat = expand_weighted(sources, limits);
  switch (rule) {
    case FusionRule::conjunctive: return conjunctive_combine(flat);
    case FusionRule::pcr5: return fuse_pcr5(flat, limits);
    case FusionRule::pcr6: return fuse_pcr6(flat, limits);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown fusion rule");
}

std::vector<ProfilePoint> convergence_profile(const MassFunction& base,
                                              const MassFunction& repeated,
                                              PcrRule rule, std::size_t k_max,
                                              FusionLimits limits) {
  if (!(base.frame() == repeated.frame())) {
    throw Error(ErrorKind::FrameMismatch, "base and repeated sources use different frames");
  }
  if (k_max == 0) {
    throw Error(ErrorKind::InvalidArgument, "k_max must be at least 1");
  }
  if (k_max >= limits.max_sources) {
    throw Error(ErrorKind::TooManySources,
                "k_max " + std::to_string(k_max) + " needs " +
                    std::to_string(k_max + 1) + " sources, above the cap of " +
                    std::to_string(limits.max_sources));
  }

  std::vector<ProfilePoint> profile;
  profile.reserve(k_max);
  std::vector<MassFunction> flat{base};
  for (std::size_t k = 1; k <= k_max; ++k) {
    flat.push_back(repeated);
    MassFunction fused = fuse_pcr(flat, rule, limits);
    const double d = max_distance(fused, repeated);
    profile.push_back({k, std::move(fused), d});
  }
  return profile;
}

}  // namespace pcrfuse
