#include "pcrfuse/frame.hpp"

#include <bit>
#include <set>

#include "pcrfuse/error.hpp"

namespace pcrfuse {

int FocalSet::cardinality() const { return std::popcount(bits_); }

Frame::Frame(std::vector<std::string> singletons) {
  if (singletons.empty()) {
    throw Error(ErrorKind::InvalidFrame, "frame must contain at least one singleton");
  }
  if (singletons.size() > kMaxSize) {
    throw Error(ErrorKind::InvalidFrame,
                "frame holds at most 64 singletons, got " +
                    std::to_string(singletons.size()));
  }
  std::set<std::string> seen;
  for (const auto& name : singletons) {
    if (name.empty()) {
      throw Error(ErrorKind::InvalidFrame, "singleton names must be non-empty");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorKind::InvalidFrame, "duplicate singleton '" + name + "'");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(singletons));
}

FocalSet Frame::full() const {
  if (size() == kMaxSize) return FocalSet(~std::uint64_t{0});
  return FocalSet((std::uint64_t{1} << size()) - 1);
}

bool Frame::in_frame(FocalSet set) const { return full().contains(set); }

std::optional<std::size_t> Frame::index_of(const std::string& name) const {
  const auto& names = *names_;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

std::string Frame::label(FocalSet set) const {
  if (set.empty()) return "∅";
  std::string out;
  const auto& names = *names_;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!set.contains(FocalSet::singleton(i))) continue;
    if (!out.empty()) out += '|';
    out += names[i];
  }
  return out;
}

FocalSet intersect_all(std::span<const FocalSet> sets) {
  if (sets.empty()) {
    throw Error(ErrorKind::InvalidArgument, "intersect_all needs at least one set");
  }
  FocalSet acc = sets.front();
  for (FocalSet s : sets.subspan(1)) acc = acc & s;
  return acc;
}

}  // namespace pcrfuse
