#include "hindman/divprop.hpp"

#include <numeric>
#include <sstream>

#include "hindman/error.hpp"

namespace hindman {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Reciprocal sums use 2^-48 fixed point so that sums of disjoint parts add
// exactly (partition checks) and supersets never sum lower (monotonicity).
constexpr int kRecipBits = 48;
constexpr std::int64_t kRecipOne = std::int64_t{1} << kRecipBits;

__extension__ using Wide = __int128;

std::int64_t recip_sum(const IntSet& x, std::size_t from) {
  std::int64_t total = 0;
  x.for_each([&](std::size_t m) {
    if (m >= 1 && m >= from) total += kRecipOne / static_cast<std::int64_t>(m);
  });
  return total;
}

std::int64_t recip_threshold(const Rational& s) {
  const Wide scaled = static_cast<Wide>(s.num) * kRecipOne;
  return static_cast<std::int64_t>((scaled + s.den - 1) / s.den);
}

bool banach_holds(const prop::Banach& b, const IntSet& x) {
  const std::size_t n = x.universe().size();
  if (b.w <= 0 || static_cast<std::size_t>(b.w) > n) return false;
  const auto w = static_cast<std::size_t>(b.w);
  const Wide need = static_cast<Wide>(b.delta.num) * b.w;
  std::size_t inside = x.count_in(0, w);
  for (std::size_t start = 0;; ++start) {
    if (static_cast<Wide>(inside) * b.delta.den >= need) return true;
    if (start + w >= n) return false;
    inside += x.contains(static_cast<std::int64_t>(start + w)) ? 1 : 0;
    inside -= x.contains(static_cast<std::int64_t>(start)) ? 1 : 0;
  }
}

// Members split into maximal chains with consecutive gaps <= g; a window
// starting at a chain's first member is the best candidate for that chain.
bool syndetic_holds(const prop::Syndetic& s, const IntSet& x) {
  const std::size_t n = x.universe().size();
  if (s.w <= 0 || static_cast<std::size_t>(s.w) > n) return false;
  const auto w = static_cast<std::size_t>(s.w);
  const auto g = static_cast<std::size_t>(s.g);
  bool found = false;
  bool in_chain = false;
  std::size_t chain_start = 0;
  std::size_t prev = 0;
  auto chain_ok = [&](std::size_t start, std::size_t end) {
    return start + w <= n && start + w - 1 <= end + g;
  };
  x.for_each([&](std::size_t m) {
    if (found) return;
    if (in_chain && m - prev > g) {
      if (chain_ok(chain_start, prev)) found = true;
      chain_start = m;
    } else if (!in_chain) {
      chain_start = m;
      in_chain = true;
    }
    prev = m;
  });
  if (!found && in_chain) found = chain_ok(chain_start, prev);
  return found;
}

}  // namespace

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (num <= 0 || den <= 0) throw Error(ErrorKind::InvalidArgument, "rational must be positive");
  const auto g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

Rational Rational::halved() const {
  if (num % 2 == 0) return Rational::make(num / 2, den);
  return Rational::make(num, den * 2);
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Infinite: return "INFINITE";
    case Variant::Banach: return "BANACH";
    case Variant::Syndetic: return "SYNDETIC";
    case Variant::Recip: return "RECIP";
    case Variant::HitSet: return "HITSET";
  }
  return "?";
}

DivProp::DivProp(Params params, std::optional<std::size_t> margin)
    : params_(std::move(params)), margin_(margin) {
  std::visit(overloaded{
                 [](const prop::Infinite& p) {
                   if (p.k < 1) throw Error(ErrorKind::InvalidArgument, "INFINITE needs k >= 1");
                 },
                 [](const prop::Banach& p) {
                   if (p.w < 1) throw Error(ErrorKind::InvalidArgument, "BANACH needs w >= 1");
                   if (p.delta.num <= 0 || p.delta.den <= 0 || p.delta.num > p.delta.den)
                     throw Error(ErrorKind::InvalidArgument, "BANACH needs delta in (0, 1]");
                 },
                 [](const prop::Syndetic& p) {
                   if (p.g < 1 || p.w < 1)
                     throw Error(ErrorKind::InvalidArgument, "SYNDETIC needs g >= 1 and w >= 1");
                 },
                 [](const prop::Recip& p) {
                   if (p.s.num <= 0 || p.s.den <= 0)
                     throw Error(ErrorKind::InvalidArgument, "RECIP needs s > 0");
                 },
                 [](const prop::HitSet& p) {
                   if (p.w.empty()) throw Error(ErrorKind::InvalidArgument, "HITSET needs W nonempty");
                 },
             },
             params_);
}

DivProp DivProp::infinite(std::int64_t k) { return DivProp(prop::Infinite{k}); }
DivProp DivProp::banach(Rational delta, std::int64_t w) { return DivProp(prop::Banach{delta, w}); }
DivProp DivProp::syndetic(std::int64_t g, std::int64_t w) { return DivProp(prop::Syndetic{g, w}); }
DivProp DivProp::recip(Rational s) { return DivProp(prop::Recip{s}); }
DivProp DivProp::hitset(IntSet w) { return DivProp(prop::HitSet{std::move(w)}); }

Variant DivProp::variant() const noexcept { return static_cast<Variant>(params_.index()); }

std::size_t DivProp::margin_for(Universe u) const noexcept {
  return margin_.value_or(u.size() / 4);
}

DivProp DivProp::with_margin(std::size_t m) const { return DivProp(params_, m); }

bool DivProp::holds(const IntSet& x) const {
  return std::visit(
      overloaded{
          [&](const prop::Infinite& p) { return static_cast<std::int64_t>(x.count()) >= p.k; },
          [&](const prop::Banach& p) { return banach_holds(p, x); },
          [&](const prop::Syndetic& p) { return syndetic_holds(p, x); },
          [&](const prop::Recip& p) { return recip_sum(x, 1) >= recip_threshold(p.s); },
          [&](const prop::HitSet& p) {
            if (p.w.universe() != x.universe())
              throw Error(ErrorKind::UniverseMismatch, "HITSET evaluated in a foreign universe");
            return x.intersects(p.w);
          },
      },
      params_);
}

DivProp DivProp::halved() const {
  Params half = std::visit(
      overloaded{
          [](const prop::Infinite& p) -> Params { return prop::Infinite{(p.k + 1) / 2}; },
          [](const prop::Banach& p) -> Params { return prop::Banach{p.delta.halved(), p.w}; },
          [](const prop::Syndetic& p) -> Params { return prop::Syndetic{2 * p.g + 1, p.w}; },
          [](const prop::Recip& p) -> Params { return prop::Recip{p.s.halved()}; },
          [](const prop::HitSet& p) -> Params { return p; },
      },
      params_);
  return DivProp(std::move(half), margin_);
}

bool DivProp::witnessed_within(const IntSet& x, std::size_t n) const {
  const Universe u = x.universe();
  if (variant() == Variant::Recip) {
    const auto& p = std::get<prop::Recip>(params_);
    return recip_sum(x, n == 0 ? 1 : n + 1) >= recip_threshold(p.s);
  }
  return holds(x & IntSet::range(u, n, u.size()));
}

bool DivProp::sane_for(Universe u) const {
  return holds(IntSet::full(u)) && !holds(IntSet(u));
}

std::string DivProp::describe() const {
  std::ostringstream os;
  os << to_string(variant()) << '(';
  std::visit(overloaded{
                 [&](const prop::Infinite& p) { os << "k=" << p.k; },
                 [&](const prop::Banach& p) { os << "delta=" << p.delta.num << '/' << p.delta.den << ", w=" << p.w; },
                 [&](const prop::Syndetic& p) { os << "g=" << p.g << ", w=" << p.w; },
                 [&](const prop::Recip& p) { os << "s=" << p.s.num << '/' << p.s.den; },
                 [&](const prop::HitSet& p) { os << "|W|=" << p.w.count(); },
             },
             params_);
  os << ')';
  if (margin_) os << " margin=" << *margin_;
  return os.str();
}

}  // namespace hindman
