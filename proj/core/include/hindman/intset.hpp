#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hindman {

/// The finite integer interval [0, n) standing in for the naturals.
class Universe {
 public:
  explicit Universe(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  friend bool operator==(Universe, Universe) = default;
  friend auto operator<=>(Universe, Universe) = default;

 private:
  std::size_t n_;
};

enum class Sign : int { Plus = 1, Minus = -1 };

/// A subset of a finite universe, stored as a packed bitset so that
/// intersection, complement and shift are word-parallel.
///
/// Bits at positions >= universe().size() are always zero.
class IntSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  explicit IntSet(Universe u);

  static IntSet full(Universe u);
  /// [lo, hi) clipped to the universe.
  static IntSet range(Universe u, std::size_t lo, std::size_t hi);
  /// Throws InvalidArgument for members outside [0, n).
  static IntSet from_members(Universe u, std::span<const std::int64_t> members);

  template <typename Pred>
  static IntSet from_predicate(Universe u, Pred&& pred) {
    IntSet s(u);
    for (std::size_t i = 0; i < u.size(); ++i)
      if (pred(i)) s.insert(i);
    return s;
  }

  Universe universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool contains(std::int64_t x) const noexcept;

  void insert(std::size_t x);
  void erase(std::size_t x);

  std::vector<std::int64_t> members() const;
  std::optional<std::size_t> first() const noexcept;
  std::optional<std::size_t> last() const noexcept;
  /// Smallest member strictly greater than x.
  std::optional<std::size_t> next_after(std::size_t x) const noexcept;
  /// Number of members in [lo, hi).
  std::size_t count_in(std::size_t lo, std::size_t hi) const noexcept;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const IntSet& other) const;
  bool intersects(const IntSet& other) const;

  IntSet& operator&=(const IntSet& other);
  IntSet& operator|=(const IntSet& other);
  IntSet& operator-=(const IntSet& other);
  friend IntSet operator&(IntSet a, const IntSet& b) { return a &= b; }
  friend IntSet operator|(IntSet a, const IntSet& b) { return a |= b; }
  friend IntSet operator-(IntSet a, const IntSet& b) { return a -= b; }

  /// Complement relative to the universe.
  IntSet complement() const;
  /// {m in [0, n) | m + k in *this}.
  IntSet shifted_down(std::size_t k) const;

  std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const IntSet& a, const IntSet& b) = default;
  /// Canonical order: universe first, then bit pattern word by word.
  friend std::strong_ordering operator<=>(const IntSet& a, const IntSet& b);

 private:
  void check_same_universe(const IntSet& other) const;
  void clear_tail() noexcept;

  Universe universe_;
  std::vector<Word> words_;
};

/// X - n = {m | m + n in X}; elements shifted below zero vanish.
IntSet shift(const IntSet& x, std::size_t n);

/// b*X: X itself for Plus, the complement in [0, N) for Minus.
IntSet signed_set(Sign b, const IntSet& x);

/// All sums of subsets of `f` (each element used at most once), including the
/// empty sum 0. Elements must be positive and distinct. Sums are not clipped
/// to any universe. Returned ascending without duplicates.
std::vector<std::int64_t> finite_sums(std::span<const std::int64_t> f);

}  // namespace hindman
