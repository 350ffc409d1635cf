// Three-source closed forms, evaluated term by term. The inner sums run
// over the union of the sources' focal sets; sets outside it have zero
// mass in every source, so only zero terms are dropped.
//
// For a focal set A the redistributed mass has three groups of terms:
//   distinct:   A, X, Y pairwise different, A ∩ X ∩ Y = ∅;
//   X repeated: A once and X in the two other sources, A ∩ X = ∅;
//   A repeated: A in two sources and X in the third, A ∩ X = ∅.
// A term is (share numerator) / (sum of grouped weights). PCR5 groups a
// repeated set by multiplying its masses, PCR6 by adding them. The
// "distinct" group is identical under both rules.

#include <algorithm>
#include <vector>

#include "pcrfuse/conjunctive.hpp"
#include "pcrfuse/error.hpp"
#include "pcrfuse/pcr.hpp"

namespace pcrfuse {
namespace {

double ratio(double numerator, double denominator) {
  return numerator == 0.0 ? 0.0 : numerator / denominator;
}

MassFunction closed_form_3(const MassFunction& m1, const MassFunction& m2,
                           const MassFunction& m3, PcrRule rule) {
  const MassFunction all[] = {m1, m2, m3};
  require_same_frame(all);

  std::vector<FocalSet> sets;
  for (const auto& src : all) {
    for (const auto& e : src.entries()) sets.push_back(e.set);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  const ConjunctiveResult conjunctive = conjunctive_combine(all);
  const bool pcr5 = rule == PcrRule::pcr5;

  // Intersections can put conjunctive mass on sets no source holds.
  std::vector<FocalSet> targets = sets;
  for (const auto& e : conjunctive.masses) targets.push_back(e.set);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  std::vector<MassEntry> out;
  for (FocalSet a : targets) {
    const double a1 = m1.mass(a), a2 = m2.mass(a), a3 = m3.mass(a);
    double value = conjunctive.mass(a);

    for (FocalSet x : sets) {
      const double x1 = m1.mass(x), x2 = m2.mass(x), x3 = m3.mass(x);

      for (FocalSet y : sets) {
        if (x == a || y == x || y == a || !(a & x & y).empty()) continue;
        const double y1 = m1.mass(y), y2 = m2.mass(y), y3 = m3.mass(y);
        value += ratio(a1 * a1 * x2 * y3, a1 + x2 + y3);
        value += ratio(y1 * a2 * a2 * x3, y1 + a2 + x3);
        value += ratio(x1 * y2 * a3 * a3, x1 + y2 + a3);
      }

      if (!(a & x).empty()) continue;

      // X repeated.
      if (pcr5) {
        value += ratio(a1 * a1 * x2 * x3, a1 + x2 * x3);
        value += ratio(x1 * a2 * a2 * x3, a2 + x1 * x3);
        value += ratio(x1 * x2 * a3 * a3, a3 + x1 * x2);
      } else {
        value += ratio(a1 * a1 * x2 * x3, a1 + x2 + x3);
        value += ratio(x1 * a2 * a2 * x3, x1 + a2 + x3);
        value += ratio(x1 * x2 * a3 * a3, x1 + x2 + a3);
      }

      // A repeated.
      if (pcr5) {
        value += ratio(a1 * a1 * a2 * a2 * x3, a1 * a2 + x3);
        value += ratio(x1 * a2 * a2 * a3 * a3, x1 + a2 * a3);
        value += ratio(a1 * a1 * x2 * a3 * a3, a1 * a3 + x2);
      } else {
        value += ratio(a1 * a1 * a2 * x3 + a1 * a2 * a2 * x3, a1 + a2 + x3);
        value += ratio(x1 * a2 * a2 * a3 + x1 * a2 * a3 * a3, x1 + a2 + a3);
        value += ratio(a1 * a1 * x2 * a3 + a1 * x2 * a3 * a3, a1 + x2 + a3);
      }
    }
    out.push_back({a, value});
  }
  return validate_mass(out, m1.frame());
}

}  // namespace

MassFunction closed_form_pcr5_3(const MassFunction& m1, const MassFunction& m2,
                                const MassFunction& m3) {
  return closed_form_3(m1, m2, m3, PcrRule::pcr5);
}

MassFunction closed_form_pcr6_3(const MassFunction& m1, const MassFunction& m2,
                                const MassFunction& m3) {
  return closed_form_3(m1, m2, m3, PcrRule::pcr6);
}

}  // namespace pcrfuse
