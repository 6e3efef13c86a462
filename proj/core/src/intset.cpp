#include "hindman/intset.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hindman/error.hpp"

namespace hindman {

namespace {

std::size_t words_for(std::size_t n) { return (n + IntSet::kWordBits - 1) / IntSet::kWordBits; }

}  // namespace

Universe::Universe(std::size_t n) : n_(n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "universe size must be >= 1");
}

IntSet::IntSet(Universe u) : universe_(u), words_(words_for(u.size()), 0) {}

IntSet IntSet::full(Universe u) {
  IntSet s(u);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.clear_tail();
  return s;
}

IntSet IntSet::range(Universe u, std::size_t lo, std::size_t hi) {
  IntSet s(u);
  hi = std::min(hi, u.size());
  for (std::size_t i = lo; i < hi; ++i) s.insert(i);
  return s;
}

IntSet IntSet::from_members(Universe u, std::span<const std::int64_t> members) {
  IntSet s(u);
  for (const auto m : members) {
    if (m < 0 || static_cast<std::size_t>(m) >= u.size())
      throw Error(ErrorKind::InvalidArgument,
                  "member " + std::to_string(m) + " outside [0, " + std::to_string(u.size()) + ")");
    s.insert(static_cast<std::size_t>(m));
  }
  return s;
}

std::size_t IntSet::count() const noexcept {
  std::size_t c = 0;
  for (const auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool IntSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool IntSet::contains(std::int64_t x) const noexcept {
  if (x < 0 || static_cast<std::size_t>(x) >= universe_.size()) return false;
  const auto ux = static_cast<std::size_t>(x);
  return (words_[ux / kWordBits] >> (ux % kWordBits)) & 1U;
}

void IntSet::insert(std::size_t x) {
  if (x >= universe_.size())
    throw Error(ErrorKind::InvalidArgument, "insert outside universe: " + std::to_string(x));
  words_[x / kWordBits] |= Word{1} << (x % kWordBits);
}

void IntSet::erase(std::size_t x) {
  if (x >= universe_.size()) return;
  words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits));
}

std::vector<std::int64_t> IntSet::members() const {
  std::vector<std::int64_t> out;
  out.reserve(count());
  for_each([&](std::size_t x) { out.push_back(static_cast<std::int64_t>(x)); });
  return out;
}

std::optional<std::size_t> IntSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return std::nullopt;
}

std::optional<std::size_t> IntSet::last() const noexcept {
  for (std::size_t w = words_.size(); w-- > 0;)
    if (words_[w] != 0)
      return w * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[w])));
  return std::nullopt;
}

std::optional<std::size_t> IntSet::next_after(std::size_t x) const noexcept {
  std::size_t start = x + 1;
  if (start >= universe_.size()) return std::nullopt;
  std::size_t w = start / kWordBits;
  Word bits = words_[w] & (~Word{0} << (start % kWordBits));
  while (true) {
    if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w == words_.size()) return std::nullopt;
    bits = words_[w];
  }
}

std::size_t IntSet::count_in(std::size_t lo, std::size_t hi) const noexcept {
  hi = std::min(hi, universe_.size());
  if (lo >= hi) return 0;
  std::size_t c = 0;
  const std::size_t wlo = lo / kWordBits;
  const std::size_t whi = (hi - 1) / kWordBits;
  for (std::size_t w = wlo; w <= whi; ++w) {
    Word bits = words_[w];
    if (w == wlo) bits &= ~Word{0} << (lo % kWordBits);
    if (w == whi && hi % kWordBits != 0) bits &= (Word{1} << (hi % kWordBits)) - 1;
    c += static_cast<std::size_t>(std::popcount(bits));
  }
  return c;
}

bool IntSet::is_subset_of(const IntSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

bool IntSet::intersects(const IntSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

IntSet& IntSet::operator&=(const IntSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

IntSet& IntSet::operator|=(const IntSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

IntSet& IntSet::operator-=(const IntSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

IntSet IntSet::complement() const {
  IntSet out(universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  out.clear_tail();
  return out;
}

IntSet IntSet::shifted_down(std::size_t k) const {
  IntSet out(universe_);
  if (k >= universe_.size()) return out;
  const std::size_t q = k / kWordBits;
  const std::size_t r = k % kWordBits;
  const std::size_t nw = words_.size();
  for (std::size_t i = 0; i + q < nw; ++i) {
    Word lo = words_[i + q] >> r;
    if (r != 0 && i + q + 1 < nw) lo |= words_[i + q + 1] << (kWordBits - r);
    out.words_[i] = lo;
  }
  return out;
}

std::strong_ordering operator<=>(const IntSet& a, const IntSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                                b.words_.end());
}

void IntSet::check_same_universe(const IntSet& other) const {
  if (universe_ != other.universe_)
    throw Error(ErrorKind::UniverseMismatch, "sets from universes of size " +
                                                 std::to_string(universe_.size()) + " and " +
                                                 std::to_string(other.universe_.size()));
}

void IntSet::clear_tail() noexcept {
  const std::size_t rem = universe_.size() % kWordBits;
  if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

IntSet shift(const IntSet& x, std::size_t n) { return x.shifted_down(n); }

IntSet signed_set(Sign b, const IntSet& x) { return b == Sign::Plus ? x : x.complement(); }

std::vector<std::int64_t> finite_sums(std::span<const std::int64_t> f) {
  std::vector<std::int64_t> sorted(f.begin(), f.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() <= 0)
    throw Error(ErrorKind::InvalidArgument, "finite_sums requires positive elements");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidArgument, "finite_sums requires distinct elements");

  std::vector<std::int64_t> sums{0};
  std::vector<std::int64_t> shifted;
  std::vector<std::int64_t> merged;
  for (const auto x : sorted) {
    shifted.clear();
    for (const auto s : sums) {
      if (s > std::numeric_limits<std::int64_t>::max() - x)
        throw Error(ErrorKind::InvalidArgument, "finite sum overflows 64 bits");
      shifted.push_back(s + x);
    }
    merged.clear();
    std::set_union(sums.begin(), sums.end(), shifted.begin(), shifted.end(),
                   std::back_inserter(merged));
    sums.swap(merged);
  }
  return sums;
}

}  // namespace hindman
