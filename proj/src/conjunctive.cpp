#include "pcrfuse/conjunctive.hpp"

#include <cmath>

#include "detail/enumeration.hpp"
#include "pcrfuse/error.hpp"

namespace pcrfuse {

ConjunctiveResult conjunctive_combine(std::span<const MassFunction> sources) {
  if (sources.empty()) {
    throw Error(ErrorKind::EmptySourceList, "conjunctive rule needs at least one source");
  }
  require_same_frame(sources);

  const Frame& frame = sources.front().frame();
  if (sources.size() == 1) {
    auto e = sources.front().entries();
    return {frame, {e.begin(), e.end()}, 0.0};
  }

  detail::CanonicalAccumulator acc;
  detail::for_each_tuple(sources, [&](std::span<const MassEntry* const> tuple) {
    acc.add(detail::joint_intersection(tuple), detail::tuple_product(tuple));
  });

  ConjunctiveResult result{frame, {}, 0.0};
  for (const auto& bucket : acc.totals()) {
    if (bucket.set.empty()) {
      result.conflict = bucket.mass;
    } else if (bucket.mass != 0.0) {
      result.masses.push_back(bucket);
    }
  }
  return result;
}

MassFunction dempster_normalize(const ConjunctiveResult& result) {
  if (std::abs(1.0 - result.conflict) <= 1e-12) {
    throw Error(ErrorKind::TotalConflict,
                "total conflict: Dempster normalization is undefined");
  }
  const double scale = 1.0 - result.conflict;
  std::vector<MassEntry> out;
  out.reserve(result.masses.size());
  for (const auto& e : result.masses) out.push_back({e.set, e.mass / scale});
  return validate_mass(out, result.frame);
}

}  // namespace pcrfuse
