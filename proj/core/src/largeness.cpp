#include "hindman/largeness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "hindman/error.hpp"
#include "hindman/fip.hpp"

namespace hindman {

namespace {

std::size_t effective_margin(const DivProp& p, Universe u) {
  return std::min(p.margin_for(u), u.size() - 1);
}

std::string list_members(const IntSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](std::size_t m) {
    os << (first ? "" : ",") << m;
    first = false;
  });
  os << '}';
  return os.str();
}

// Memoizes adversary moves: closing V + {C} depends only on (V, C).
class Adversary {
 public:
  Adversary(const DivProp& p, const LargenessConfig& cfg) : p_(p), cfg_(cfg) {}

  std::optional<SetFamily> extend(const SetFamily& v, const IntSet& c) {
    Key key{std::vector<IntSet>(v.begin(), v.end()), c};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::optional<SetFamily> result;
    if (cfg_.budget > v.size()) {
      try {
        SetFamily w = semigroup_closure(v.with(c), p_, cfg_.budget - v.size() - 1);
        if (core_fip(w, IntSet::full(v.universe()), p_)) result = std::move(w);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ClosureFailed) throw;
      }
    }
    cache_.emplace(std::move(key), result);
    return result;
  }

  std::optional<SetFamily> refute(const IntSet& a, const SetFamily& v, std::size_t depth) {
    if (!core_fip(v, a, p_)) return v;
    if (depth == 0) return std::nullopt;
    for (const auto& c : adversary_pool(a, v, p_, cfg_.pool)) {
      auto w = extend(v, c);
      if (!w) continue;
      if (auto r = refute(a, *w, depth - 1)) return r;
    }
    return std::nullopt;
  }

  bool large(const IntSet& a, const SetFamily& v) { return !refute(a, v, cfg_.depth).has_value(); }

 private:
  using Key = std::pair<std::vector<IntSet>, IntSet>;

  const DivProp& p_;
  const LargenessConfig& cfg_;
  std::map<Key, std::optional<SetFamily>> cache_;
};

void require_semigroup(const SetFamily& u, const DivProp& p, const LargenessConfig& cfg) {
  if (cfg.budget < u.size())
    throw Error(ErrorKind::InvalidArgument, "largeness budget smaller than the family");
  if (!is_semigroup(u, p)) throw Error(ErrorKind::PreconditionFailed, "family is not a P-semigroup");
}

}  // namespace

std::string to_string(AdversaryPool pool) {
  return pool == AdversaryPool::Shifts ? "shifts" : "shifts+pairs";
}

AdversaryPool adversary_pool_from_string(const std::string& name) {
  if (name == "shifts") return AdversaryPool::Shifts;
  if (name == "shifts+pairs" || name == "pairs") return AdversaryPool::ShiftsAndPairs;
  throw Error(ErrorKind::InvalidArgument, "unknown adversary pool '" + name + "'");
}

IntSet observed_core(Universe u, const DivProp& p) {
  return IntSet::range(u, 0, u.size() - effective_margin(p, u));
}

bool core_fip(const SetFamily& v, const IntSet& a, const DivProp& p) {
  return p.holds(intersect_all(v) & a & observed_core(v.universe(), p));
}

std::vector<IntSet> adversary_pool(const IntSet& a, const SetFamily& u, const DivProp& p,
                                   AdversaryPool pool) {
  const std::size_t margin = effective_margin(p, u.universe());
  std::vector<IntSet> out;
  std::set<IntSet> seen;
  auto push = [&](IntSet s) {
    if (s.empty() || u.contains(s) || !seen.insert(s).second) return;
    out.push_back(std::move(s));
  };

  std::vector<IntSet> from_a;
  for (std::size_t n = 0; n <= margin; ++n) {
    IntSet sh = shift(a, n);
    from_a.push_back(sh.complement());
    from_a.push_back(std::move(sh));
  }
  for (const auto& s : from_a) push(s);
  for (const auto& x : u)
    for (std::size_t n = 0; n <= margin; ++n) {
      IntSet sh = shift(x, n);
      push(sh.complement());
      push(std::move(sh));
    }
  if (pool == AdversaryPool::ShiftsAndPairs)
    for (std::size_t i = 0; i < from_a.size(); ++i)
      for (std::size_t j = i + 1; j < from_a.size(); ++j) push(from_a[i] & from_a[j]);
  return out;
}

std::optional<SetFamily> refuting_extension(const IntSet& a, const SetFamily& u, const DivProp& p,
                                            const LargenessConfig& cfg) {
  require_semigroup(u, p, cfg);
  Adversary adv(p, cfg);
  return adv.refute(a, u, cfg.depth);
}

bool is_large(const IntSet& a, const SetFamily& u, const DivProp& p, const LargenessConfig& cfg) {
  return !refuting_extension(a, u, p, cfg).has_value();
}

ColorSplit color_split(std::span<const IntSet> colors, const SetFamily& u, const DivProp& p,
                       const LargenessConfig& cfg) {
  require_semigroup(u, p, cfg);
  if (colors.empty()) throw Error(ErrorKind::PreconditionFailed, "no colors given");
  Adversary adv(p, cfg);
  IntSet all(u.universe());
  for (const auto& c : colors) all |= c;
  if (!adv.large(all, u))
    throw Error(ErrorKind::PreconditionFailed, "union of the colors is not large");

  SetFamily v = u;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    auto w = adv.refute(colors[i], v, cfg.depth);
    if (!w) return {i, std::move(v)};
    v = std::move(*w);
  }
  throw Error(ErrorKind::NoColor, "every color was refuted by some extension");
}

StarSet star_set(const IntSet& a, const SetFamily& u, const DivProp& p, const LargenessConfig& cfg) {
  require_semigroup(u, p, cfg);
  Adversary adv(p, cfg);
  if (!adv.large(a, u)) throw Error(ErrorKind::PreconditionFailed, "A is not large for U");

  const Universe un = u.universe();
  const std::size_t margin = effective_margin(p, un);

  // Decide every single shift: either A - n stays large, or its complement
  // joins the family.
  SetFamily v = u;
  for (std::size_t n = 0; n <= margin; ++n) {
    const IntSet t = shift(a, n);
    auto w = adv.refute(t, v, cfg.depth);
    if (!w) continue;
    auto decided = adv.extend(*w, t.complement());
    v = decided ? std::move(*decided) : std::move(*w);
  }

  if (!adv.large(a, v))
    throw Error(ErrorKind::StarFailed, "A stopped being large after deciding its shifts");

  IntSet s(un);
  s.insert(0);
  IntSet running = a;
  for (std::size_t m = 1; m <= margin; ++m) {
    IntSet cand = running & shift(a, m);
    if (adv.large(cand, v)) {
      s.insert(m);
      running = std::move(cand);
    }
  }

  const IntSet s_padded = s | IntSet::range(un, margin + 1, un.size());
  SetFamily with_s = v;
  s.for_each([&](std::size_t n) { with_s.insert(shift_padded(s_padded, n)); });
  if (!pfip(with_s, p) || !core_fip(with_s, IntSet::full(un), p))
    throw Error(ErrorKind::StarFailed, "V + {S - n | n in S} lacks P-fip, S = " + list_members(s));
  SetFamily v2(un);
  try {
    v2 = semigroup_closure(with_s, p, cfg.budget > with_s.size() ? cfg.budget - with_s.size() : 0);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ClosureFailed) throw;
    throw Error(ErrorKind::StarFailed, std::string("closing V + {S - n}: ") + e.what());
  }
  if (!core_fip(v2, IntSet::full(un), p))
    throw Error(ErrorKind::StarFailed, "closure of V + {S - n} lacks core P-fip");

  IntSet branching(un);
  a.for_each([&](std::size_t n) {
    if (n <= margin && adv.large(a & shift(a, n), v2)) branching.insert(n);
  });
  if (!p.holds(branching))
    throw Error(ErrorKind::StarFailed, "branching set " + list_members(branching) +
                                           " fails " + p.describe() + ", S = " + list_members(s));
  return {std::move(v2), std::move(branching), std::move(s)};
}

}  // namespace hindman
