#include "hindman/family.hpp"

#include <algorithm>

#include "hindman/error.hpp"

namespace hindman {

SetFamily::SetFamily(Universe u) : universe_(u) {}

SetFamily::SetFamily(Universe u, std::vector<IntSet> members) : universe_(u) {
  for (const auto& m : members)
    if (m.universe() != u)
      throw Error(ErrorKind::UniverseMismatch, "family member from a different universe");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

SetFamily SetFamily::trivial(Universe u) { return SetFamily(u, {IntSet::full(u)}); }

bool SetFamily::contains(const IntSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool SetFamily::insert(IntSet s) {
  if (s.universe() != universe_)
    throw Error(ErrorKind::UniverseMismatch, "family member from a different universe");
  auto it = std::lower_bound(members_.begin(), members_.end(), s);
  if (it != members_.end() && *it == s) return false;
  members_.insert(it, std::move(s));
  return true;
}

SetFamily SetFamily::with(IntSet s) const {
  SetFamily out = *this;
  out.insert(std::move(s));
  return out;
}

IntSet intersect_all(const SetFamily& family) {
  return intersect_all(family.universe(), family.members());
}

IntSet intersect_all(Universe u, std::span<const IntSet> sets) {
  if (sets.empty()) throw Error(ErrorKind::EmptyFamily, "intersection of an empty family");
  IntSet out = IntSet::full(u);
  for (const auto& s : sets) out &= s;
  return out;
}

}  // namespace hindman
