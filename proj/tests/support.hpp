#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hindman/divprop.hpp"
#include "hindman/family.hpp"
#include "hindman/fip.hpp"
#include "hindman/intset.hpp"

namespace hindman::testing {

inline IntSet random_set(Universe u, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution coin(density);
  return IntSet::from_predicate(u, [&](std::size_t) { return coin(rng); });
}

inline IntSet set_of(std::size_t n, std::vector<std::int64_t> members) {
  return IntSet::from_members(Universe(n), members);
}

inline IntSet multiples(std::size_t n, std::size_t d, std::size_t offset = 0) {
  return IntSet::from_predicate(Universe(n), [&](std::size_t i) { return i % d == offset; });
}

// Reference shift on plain vectors, independent of the word-level code.
inline std::vector<std::int64_t> naive_shift(const std::vector<std::int64_t>& xs, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto x : xs)
    if (x - n >= 0) out.push_back(x - n);
  return out;
}


struct Lemma31Instance {
  SetFamily u;
  IntSet a;
  IntSet s;
  DivProp p;
};

// First F (sizes 1..3 in lexicographic order, then all of S) with
// X cap the padded S - n over n in F failing P.
inline std::vector<std::int64_t> first_failing_subset(const IntSet& x, const IntSet& s, const DivProp& p) {
  const auto members = s.members();
  auto fails = [&](const std::vector<std::int64_t>& f) {
    IntSet z = x;
    for (const auto n : f) z &= shift_padded(s, static_cast<std::size_t>(n));
    return !p.holds(z);
  };
  const std::size_t k = members.size();
  for (std::size_t i = 0; i < k; ++i)
    if (fails({members[i]})) return {members[i]};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (fails({members[i], members[j]})) return {members[i], members[j]};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l)
        if (fails({members[i], members[j], members[l]})) return {members[i], members[j], members[l]};
  return members;
}

// Builds (U, A, S) for HITSET(W) meeting both lemma31 preconditions:
// U = {dZ}, W = dZ cap [1, M] plus random points below N - M (0 is left out
// because it lies in every S - n with n in S), and A has no member at
// anchor + j for j outside S or j in the F the lemma will select, where the
// anchor is a member of dZ cap W. Returns nullopt when the drawn S keeps
// U + {S - n | n in S} fip, so callers redraw.
inline std::optional<Lemma31Instance> lemma31_instance(std::size_t n, std::mt19937_64& rng) {
  const Universe u(n);
  const std::size_t margin = n / 4;
  std::uniform_int_distribution<std::size_t> step_dist(1, 3);
  const std::size_t d = step_dist(rng);
  const IntSet steps = multiples(n, d);

  const IntSet w = (random_set(u, rng, 0.2) & IntSet::range(u, 1, n - margin)) |
                   (steps & IntSet::range(u, 1, margin + 1));
  const DivProp p = DivProp::hitset(w);
  const IntSet s = random_set(u, rng, 0.3) & IntSet::range(u, 0, margin + 1);

  SetFamily family(u, {steps});
  SetFamily self_shifts = family;
  s.for_each([&](std::size_t k) { self_shifts.insert(shift_padded(s, k)); });
  if (pfip(self_shifts, p)) return std::nullopt;

  const std::vector<std::int64_t> anchors = (steps & w).members();
  std::uniform_int_distribution<std::size_t> pick(0, anchors.size() - 1);
  const auto anchor = static_cast<std::size_t>(anchors[pick(rng)]);
  IntSet f_set(u);
  for (const auto k : first_failing_subset(steps, s, p)) f_set.insert(static_cast<std::size_t>(k));

  IntSet a = random_set(u, rng, 0.5);
  for (std::size_t j = 0; anchor + j < n; ++j) {
    const auto sj = static_cast<std::int64_t>(j);
    if (!s.contains(sj) || f_set.contains(sj)) a.erase(anchor + j);
  }
  return Lemma31Instance{std::move(family), std::move(a), s, p};
}

}  // namespace hindman::testing
