#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pcrfuse {

/// Subset of a frame, one bit per singleton (bit i <-> singleton i).
/// A zero mask is the empty set; it only shows up as a conflict
/// accumulator, never inside a validated mass function.
class FocalSet {
 public:
  constexpr FocalSet() = default;
  constexpr explicit FocalSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr FocalSet singleton(std::size_t index) {
    return FocalSet(std::uint64_t{1} << index);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int cardinality() const;

  constexpr bool contains(FocalSet other) const {
    return (bits_ & other.bits_) == other.bits_;
  }

  friend constexpr FocalSet operator&(FocalSet a, FocalSet b) {
    return FocalSet(a.bits_ & b.bits_);
  }
  friend constexpr FocalSet operator|(FocalSet a, FocalSet b) {
    return FocalSet(a.bits_ | b.bits_);
  }
  friend constexpr bool operator==(FocalSet, FocalSet) = default;
  friend constexpr auto operator<=>(FocalSet, FocalSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Frame of discernment: an ordered list of mutually exclusive singleton
/// names. Position in the list is the bit position in every FocalSet.
/// Copies share the underlying name list.
class Frame {
 public:
  static constexpr std::size_t kMaxSize = 64;

  /// Throws Error(InvalidFrame) on an empty list, more than 64 names,
  /// an empty name, or a duplicate.
  explicit Frame(std::vector<std::string> singletons);

  std::size_t size() const { return names_->size(); }
  const std::vector<std::string>& singletons() const { return *names_; }

  /// Θ, the union of every singleton.
  FocalSet full() const;
  bool in_frame(FocalSet set) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Names of the members joined by '|', in frame order ("A|B").
  /// The empty set renders as "∅".
  std::string label(FocalSet set) const;

  friend bool operator==(const Frame& a, const Frame& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Bitwise intersection of every member. Returns an empty FocalSet when
/// the joint intersection is empty. Throws Error(InvalidArgument) on an
/// empty list.
FocalSet intersect_all(std::span<const FocalSet> sets);

}  // namespace pcrfuse
