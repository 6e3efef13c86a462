#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hindman/intset.hpp"

namespace hindman {

/// A finite, deduplicated collection of sets over one universe. Members are
/// kept in canonical (bit pattern) order, so equality is structural.
class SetFamily {
 public:
  explicit SetFamily(Universe u);
  SetFamily(Universe u, std::vector<IntSet> members);

  /// {[0, N)}.
  static SetFamily trivial(Universe u);

  Universe universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const IntSet> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(const IntSet& s) const;
  /// Returns false if `s` was already present.
  bool insert(IntSet s);
  SetFamily with(IntSet s) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  Universe universe_;
  std::vector<IntSet> members_;
};

/// Pointwise intersection of all members; EmptyFamily when there are none.
IntSet intersect_all(const SetFamily& family);
IntSet intersect_all(Universe u, std::span<const IntSet> sets);

}  // namespace hindman
