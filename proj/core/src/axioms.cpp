#include "hindman/axioms.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace hindman {

namespace {

using Rng = std::mt19937_64;

IntSet bernoulli_set(Universe u, std::size_t lo, std::size_t hi, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  IntSet s(u);
  for (std::size_t i = lo; i < hi; ++i)
    if (coin(rng)) s.insert(i);
  return s;
}

// Mixes uniform-density sets with dense blocks so that window-based
// properties see both scattered and concentrated inputs.
IntSet random_set(Universe u, Rng& rng) {
  const std::size_t n = u.size();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (unit(rng) < 0.5) return bernoulli_set(u, 0, n, unit(rng), rng);
  std::uniform_int_distribution<std::size_t> pos(0, n);
  std::size_t a = pos(rng);
  std::size_t b = pos(rng);
  if (a > b) std::swap(a, b);
  return bernoulli_set(u, a, b, 0.5 + 0.5 * unit(rng), rng);
}

IntSet thinned(const IntSet& y, double drop, Rng& rng) {
  std::bernoulli_distribution coin(drop);
  IntSet x = y;
  y.for_each([&](std::size_t m) {
    if (coin(rng)) x.erase(m);
  });
  return x;
}

AxiomResult make_result(int index, std::string name, CheckLevel level, double rate = 1.0) {
  AxiomResult r;
  r.index = index;
  r.name = std::move(name);
  r.level = level;
  r.required_rate = rate;
  return r;
}

}  // namespace

std::string to_string(CheckLevel level) {
  switch (level) {
    case CheckLevel::Exact: return "exact";
    case CheckLevel::Relaxed: return "relaxed";
    case CheckLevel::NotApplicable: return "not-applicable";
  }
  return "?";
}

double AxiomResult::pass_rate() const noexcept {
  if (checked == 0) return 1.0;
  return static_cast<double>(checked - failures) / static_cast<double>(checked);
}

bool AxiomResult::passed() const noexcept {
  if (level == CheckLevel::NotApplicable) return true;
  if (required_rate >= 1.0) return failures == 0;
  return pass_rate() >= required_rate;
}

bool AxiomReport::all_passed() const noexcept {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.passed(); });
}

PropertyModel model_of(const DivProp& p, Universe u) {
  PropertyModel m;
  m.name = p.describe();
  m.holds = [p](const IntSet& x) { return p.holds(x); };
  const DivProp relaxed = p.halved();
  m.holds_relaxed = [relaxed](const IntSet& x) { return relaxed.holds(x); };
  m.partition_exact = p.variant() == Variant::HitSet;
  if (p.shift_invariant())
    m.witnessed_within = [p](const IntSet& x, std::size_t n) { return p.witnessed_within(x, n); };
  m.margin = p.margin_for(u);
  return m;
}

AxiomReport axiom_report(const PropertyModel& model, Universe u, std::size_t sample_count,
                         std::uint64_t seed) {
  Rng rng(seed);
  AxiomReport report;
  report.property = model.name;
  report.universe = u.size();
  report.margin = std::min(model.margin, u.size() - 1);
  report.samples = sample_count;
  report.seed = seed;

  auto& universe_in = report.axioms[0] = make_result(1, "universe in P", CheckLevel::Exact);
  universe_in.checked = 1;
  universe_in.failures = model.holds(IntSet::full(u)) ? 0 : 1;

  auto& empty_out = report.axioms[1] = make_result(2, "empty set not in P", CheckLevel::Exact);
  empty_out.checked = 1;
  empty_out.failures = model.holds(IntSet(u)) ? 1 : 0;

  auto& monotone = report.axioms[2] = make_result(3, "upward closed", CheckLevel::Exact);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < sample_count; ++i) {
    IntSet x(u);
    IntSet y(u);
    if (i % 2 == 0) {
      x = random_set(u, rng);
      y = x | random_set(u, rng);
    } else {
      y = random_set(u, rng);
      x = thinned(y, 0.3 * unit(rng), rng);
    }
    ++monotone.checked;
    if (model.holds(x) && !model.holds(y)) ++monotone.failures;
  }

  auto& partition = report.axioms[3] =
      model.partition_exact
          ? make_result(4, "partition regular", CheckLevel::Exact)
          : make_result(4, "partition regular (halved parameter)", CheckLevel::Relaxed,
                        kRelaxedPartitionRate);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < sample_count; ++i) {
    std::optional<IntSet> x;
    for (int attempt = 0; attempt < 16 && !x; ++attempt) {
      IntSet cand = random_set(u, rng);
      if (model.holds(cand)) x = std::move(cand);
    }
    if (!x) continue;
    IntSet part0(u);
    IntSet part1(u);
    x->for_each([&](std::size_t m) { (coin(rng) ? part0 : part1).insert(m); });
    ++partition.checked;
    if (!model.holds_relaxed(part0) && !model.holds_relaxed(part1)) ++partition.failures;
  }

  auto& shifts = report.axioms[4] =
      model.witnessed_within
          ? make_result(5, "shift invariant (witness transport, n <= M)", CheckLevel::Relaxed)
          : make_result(5, "shift invariant", CheckLevel::NotApplicable);
  if (model.witnessed_within) {
    for (std::size_t i = 0; i < sample_count; ++i) {
      const IntSet x = random_set(u, rng);
      for (std::size_t n = 0; n <= report.margin; ++n) {
        if (!model.witnessed_within(x, n)) continue;
        ++shifts.checked;
        if (!model.holds(shift(x, n))) ++shifts.failures;
      }
    }
  }
  return report;
}

AxiomReport axiom_report(const DivProp& p, Universe u, std::size_t sample_count, std::uint64_t seed) {
  return axiom_report(model_of(p, u), u, sample_count, seed);
}

}  // namespace hindman
