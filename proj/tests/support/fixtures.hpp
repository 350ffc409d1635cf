#pragma once

#include "pcrfuse/mass.hpp"

namespace pcrfuse::testing {

// Two-hypothesis worked example: m1 = (0.1, 0.7, 0.2), m2 = (0.4, 0.1, 0.5)
// on A, B, A|B.
struct WorkedExample {
  Frame frame{{"A", "B"}};
  FocalSet a = FocalSet::singleton(0);
  FocalSet b = FocalSet::singleton(1);
  FocalSet ab = a | b;

  MassFunction mass(double ma, double mb, double mab) const {
    const MassEntry raw[] = {{a, ma}, {b, mb}, {ab, mab}};
    return validate_mass(raw, frame);
  }
  MassFunction m1() const { return mass(0.1, 0.7, 0.2); }
  MassFunction m2() const { return mass(0.4, 0.1, 0.5); }
};

}  // namespace pcrfuse::testing
