#include "hindman/fip.hpp"

#include <algorithm>
#include <string>

#include "hindman/error.hpp"

namespace hindman {

namespace {

std::size_t effective_margin(const DivProp& p, Universe u) {
  return std::min(p.margin_for(u), u.size() - 1);
}

// Invokes fn on each subset of `items` of size k, lexicographic by index.
// Stops early when fn returns true.
template <typename Fn>
bool for_each_combination(const std::vector<std::int64_t>& items, std::size_t k, Fn&& fn) {
  if (k > items.size()) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::int64_t> pick(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) pick[i] = items[idx[i]];
    if (fn(pick)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class Closer {
 public:
  Closer(SetFamily v, std::size_t budget) : v_(std::move(v)), budget_(budget) {}

  void add(IntSet s) {
    if (v_.contains(s)) return;
    if (added_ == budget_)
      throw Error(ErrorKind::ClosureFailed,
                  "budget of " + std::to_string(budget_) + " new members exhausted");
    v_.insert(s);
    queue_.push_back(std::move(s));
    ++added_;
  }

  void close_intersections() {
    while (!queue_.empty()) {
      IntSet g = std::move(queue_.back());
      queue_.pop_back();
      const std::vector<IntSet> snapshot(v_.begin(), v_.end());
      for (const auto& m : snapshot) add(g & m);
    }
  }

  void seed_all() { queue_.assign(v_.begin(), v_.end()); }

  SetFamily& family() { return v_; }

 private:
  SetFamily v_;
  std::size_t budget_;
  std::size_t added_ = 0;
  std::vector<IntSet> queue_;
};

}  // namespace

bool pfip(const SetFamily& u, const DivProp& p) { return p.holds(intersect_all(u)); }

bool tilde_in(const IntSet& x, const SetFamily& u) { return intersect_all(u).is_subset_of(x); }

bool tilde_in_shifted(const IntSet& x, std::size_t n, const SetFamily& u) {
  const Universe un = u.universe();
  const IntSet observed = intersect_all(u) & IntSet::range(un, 0, n >= un.size() ? 0 : un.size() - n);
  return observed.is_subset_of(shift(x, n));
}

IntSet shift_padded(const IntSet& x, std::size_t n) {
  const Universe u = x.universe();
  return shift(x, n) | IntSet::range(u, n >= u.size() ? 0 : u.size() - n, u.size());
}

SplitResult split_extend(const SetFamily& u, const IntSet& a, const DivProp& p) {
  if (!pfip(u, p)) throw Error(ErrorKind::PreconditionFailed, "split_extend needs a P-fip family");
  SetFamily plus = u.with(a);
  if (pfip(plus, p)) return {Sign::Plus, std::move(plus)};
  SetFamily minus = u.with(signed_set(Sign::Minus, a));
  if (pfip(minus, p)) return {Sign::Minus, std::move(minus)};
  throw Error(ErrorKind::BothFail, "neither U+{A} nor U+{-1*A} has P-fip under " + p.describe());
}

bool is_semigroup(const SetFamily& u, const DivProp& p) {
  if (!pfip(u, p)) return false;
  const auto members = u.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!u.contains(members[i] & members[j])) return false;

  const Universe un = u.universe();
  const std::size_t margin = effective_margin(p, un);
  for (const auto& x : members) {
    IntSet y = IntSet::range(un, margin + 1, un.size());
    for (std::size_t n = 0; n <= margin; ++n)
      if (tilde_in_shifted(x, n, u)) y.insert(n);
    if (!tilde_in(y, u)) return false;
  }
  return true;
}

SetFamily semigroup_closure(const SetFamily& u, const DivProp& p, std::size_t budget) {
  if (u.empty()) throw Error(ErrorKind::EmptyFamily, "semigroup_closure of an empty family");
  if (!pfip(u, p)) throw Error(ErrorKind::ClosureFailed, "input family lacks P-fip");

  const Universe un = u.universe();
  const std::size_t margin = effective_margin(p, un);
  Closer closer(u, budget);
  closer.seed_all();

  while (true) {
    closer.close_intersections();
    const SetFamily& v = closer.family();
    const IntSet core = intersect_all(v);

    std::optional<IntSet> fix;
    for (const auto& x : v) {
      for (std::size_t n = 0; n <= margin && !fix; ++n)
        if (core.contains(static_cast<std::int64_t>(n)) && !tilde_in_shifted(x, n, v))
          fix = shift_padded(x, n);
      if (fix) break;
    }
    if (!fix) return v;

    const IntSet offending = *fix;
    closer.add(std::move(*fix));
    if (!pfip(closer.family(), p))
      throw Error(ErrorKind::ClosureFailed,
                  "adding shift set with " + std::to_string(offending.count()) +
                      " members breaks P-fip");
  }
}

Lemma31Result lemma31(const SetFamily& u, const IntSet& a, const IntSet& s, const DivProp& p) {
  if (!is_semigroup(u, p))
    throw Error(ErrorKind::PreconditionFailed, "lemma31 needs a P-semigroup");
  const Universe un = u.universe();
  const std::size_t n_univ = un.size();

  SetFamily avoid = u;
  for (std::size_t n = 0; n < n_univ; ++n)
    if (!s.contains(static_cast<std::int64_t>(n))) avoid.insert(shift(a, n).complement());
  if (!pfip(avoid, p))
    throw Error(ErrorKind::PreconditionFailed, "U + {-1*(A-n) | n not in S} lacks P-fip");

  SetFamily self_shifts = u;
  s.for_each([&](std::size_t n) { self_shifts.insert(shift_padded(s, n)); });
  if (pfip(self_shifts, p))
    throw Error(ErrorKind::PreconditionFailed, "U + {S-n | n in S} already has P-fip");

  const std::size_t margin = effective_margin(p, un);
  const std::vector<std::int64_t> s_members = s.members();

  std::vector<IntSet> xs{intersect_all(u)};
  for (const auto& m : u)
    if (m != xs.front()) xs.push_back(m);

  for (const auto& x : xs) {
    IntSet y = IntSet::range(un, margin + 1, n_univ);
    for (std::size_t n = 0; n <= margin; ++n)
      if (tilde_in_shifted(x, n, u)) y.insert(n);

    std::optional<Lemma31Result> found;
    auto attempt = [&](const std::vector<std::int64_t>& f) {
      IntSet z = x;
      for (const auto n : f) z &= shift_padded(s, static_cast<std::size_t>(n));
      if (p.holds(z)) return false;

      SetFamily conclusion = u;
      for (std::size_t m = 0; m <= margin; ++m) {
        if (!y.contains(static_cast<std::int64_t>(m))) continue;
        IntSet cover(un);
        for (const auto n : f) cover |= shift(a, static_cast<std::size_t>(n) + m).complement();
        conclusion.insert(std::move(cover));
      }
      if (!pfip(conclusion, p)) return false;
      found = Lemma31Result{x, f, y, std::move(conclusion)};
      return true;
    };

    for (std::size_t k = 1; k <= std::min<std::size_t>(3, s_members.size()); ++k)
      if (for_each_combination(s_members, k, attempt)) return std::move(*found);
    if (s_members.size() > 3 && attempt(s_members)) return std::move(*found);
  }
  throw Error(ErrorKind::NoWitness, "no (X, F) pair yields a P-fip conclusion family");
}

}  // namespace hindman
