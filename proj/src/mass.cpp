#include "pcrfuse/mass.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pcrfuse/error.hpp"

namespace pcrfuse {
namespace {

double lookup(std::span<const MassEntry> entries, FocalSet set) {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), set,
      [](const MassEntry& e, FocalSet s) { return e.set < s; });
  return (it != entries.end() && it->set == set) ? it->mass : 0.0;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

double MassFunction::mass(FocalSet set) const { return lookup(entries_, set); }

double MassFunction::total() const {
  double sum = 0.0;
  for (const auto& e : entries_) sum += e.mass;
  return sum;
}

double ConjunctiveResult::mass(FocalSet set) const { return lookup(masses, set); }

MassFunction validate_mass(std::span<const MassEntry> raw, const Frame& frame) {
  for (const auto& e : raw) {
    if (e.set.empty()) {
      throw Error(ErrorKind::EmptyFocalSet, "the empty set cannot carry mass");
    }
    if (!frame.in_frame(e.set)) {
      throw Error(ErrorKind::OutOfFrame,
                  "focal set has bits beyond the frame size " +
                      std::to_string(frame.size()));
    }
    if (!std::isfinite(e.mass)) {
      throw Error(ErrorKind::NonFiniteMass,
                  "mass of " + frame.label(e.set) + " is not a finite number");
    }
    if (e.mass < 0.0) {
      throw Error(ErrorKind::NegativeMass, "mass of " + frame.label(e.set) +
                                               " is negative (" +
                                               format_value(e.mass) + ")");
    }
  }

  std::vector<MassEntry> sorted(raw.begin(), raw.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const MassEntry& a, const MassEntry& b) { return a.set < b.set; });

  std::vector<MassEntry> canonical;
  canonical.reserve(sorted.size());
  for (const auto& e : sorted) {
    if (!canonical.empty() && canonical.back().set == e.set) {
      canonical.back().mass += e.mass;
    } else {
      canonical.push_back(e);
    }
  }
  std::erase_if(canonical, [](const MassEntry& e) { return e.mass == 0.0; });

  double sum = 0.0;
  for (const auto& e : canonical) sum += e.mass;
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw Error(ErrorKind::NonUnitSum,
                "masses sum to " + format_value(sum) + ", expected 1");
  }
  return MassFunction(frame, std::move(canonical));
}

MassFunction vacuous(const Frame& frame) {
  const MassEntry whole{frame.full(), 1.0};
  return validate_mass(std::span(&whole, 1), frame);
}

MassFunction discount(const MassFunction& m, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::AlphaOutOfRange,
                "discount factor must lie in [0, 1], got " + format_value(alpha));
  }
  const FocalSet theta = m.frame().full();
  std::vector<MassEntry> out;
  out.reserve(m.size() + 1);
  for (const auto& e : m.entries()) {
    if (e.set != theta) out.push_back({e.set, alpha * e.mass});
  }
  out.push_back({theta, alpha * m.mass(theta) + (1.0 - alpha)});
  return validate_mass(out, m.frame());
}

double max_distance(const MassFunction& m, const MassFunction& m2) {
  if (!(m.frame() == m2.frame())) {
    throw Error(ErrorKind::FrameMismatch, "mass functions are defined on different frames");
  }
  auto a = m.entries();
  auto b = m2.entries();
  double worst = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    double gap;
    if (j == b.size() || (i < a.size() && a[i].set < b[j].set)) {
      gap = a[i++].mass;
    } else if (i == a.size() || b[j].set < a[i].set) {
      gap = b[j++].mass;
    } else {
      gap = std::abs(a[i++].mass - b[j++].mass);
    }
    worst = std::max(worst, gap);
  }
  return worst;
}

void require_same_frame(std::span<const MassFunction> sources) {
  for (std::size_t i = 1; i < sources.size(); ++i) {
    if (!(sources[i].frame() == sources.front().frame())) {
      throw Error(ErrorKind::FrameMismatch,
                  "source " + std::to_string(i + 1) +
                      " is defined on a different frame than source 1");
    }
  }
}

}  // namespace pcrfuse
