#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "hindman/intset.hpp"

namespace hindman {

/// Positive rational, kept in lowest terms.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  Rational halved() const;
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

namespace prop {

/// |X| >= k.
struct Infinite {
  std::int64_t k;
  friend bool operator==(const Infinite&, const Infinite&) = default;
};

/// Some length-w window of [0, N) has |X cap window| >= delta * w.
struct Banach {
  Rational delta;
  std::int64_t w;
  friend bool operator==(const Banach&, const Banach&) = default;
};

/// Some length-w window [x, x+w) inside [0, N) starts at a member x, has
/// consecutive members at most g apart, and ends within g of its last member.
struct Syndetic {
  std::int64_t g;
  std::int64_t w;
  friend bool operator==(const Syndetic&, const Syndetic&) = default;
};

/// sum over x in X, x >= 1, of 1/x is at least s.
struct Recip {
  Rational s;
  friend bool operator==(const Recip&, const Recip&) = default;
};

/// X meets the fixed nonempty set W. Exactly partition regular, not shift
/// invariant.
struct HitSet {
  IntSet w;
  friend bool operator==(const HitSet&, const HitSet&) = default;
};

}  // namespace prop

enum class Variant { Infinite, Banach, Syndetic, Recip, HitSet };

std::string to_string(Variant v);

/// Finite surrogate of a divisible, shift-invariant property of sets of
/// naturals. `margin` is the shift budget M; unset means N/4 for whatever
/// universe the property is evaluated in.
class DivProp {
 public:
  using Params = std::variant<prop::Infinite, prop::Banach, prop::Syndetic, prop::Recip, prop::HitSet>;

  explicit DivProp(Params params, std::optional<std::size_t> margin = std::nullopt);

  static DivProp infinite(std::int64_t k);
  static DivProp banach(Rational delta, std::int64_t w);
  static DivProp syndetic(std::int64_t g, std::int64_t w);
  static DivProp recip(Rational s);
  static DivProp hitset(IntSet w);

  Variant variant() const noexcept;
  const Params& params() const noexcept { return params_; }
  std::optional<std::size_t> margin() const noexcept { return margin_; }
  std::size_t margin_for(Universe u) const noexcept;
  DivProp with_margin(std::size_t m) const;

  bool holds(const IntSet& x) const;

  /// Quantitative parameter halved: k -> ceil(k/2), delta -> delta/2,
  /// s -> s/2, g -> 2g+1. HITSET is returned unchanged.
  DivProp halved() const;

  bool shift_invariant() const noexcept { return variant() != Variant::HitSet; }

  /// Whether `holds` is witnessed entirely by members at positions >= n
  /// (strictly greater than n for RECIP, where n itself would land on 0).
  /// Only meaningful for shift-invariant variants.
  bool witnessed_within(const IntSet& x, std::size_t n) const;

  /// Parameters small enough that the whole universe satisfies the property.
  bool sane_for(Universe u) const;

  std::string describe() const;

  friend bool operator==(const DivProp&, const DivProp&) = default;

 private:
  Params params_;
  std::optional<std::size_t> margin_;
};

inline bool holds(const DivProp& p, const IntSet& x) { return p.holds(x); }

}  // namespace hindman
