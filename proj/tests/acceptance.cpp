// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "hindman/axioms.hpp"
#include "hindman/error.hpp"
#include "hindman/fip.hpp"
#include "hindman/io.hpp"
#include "hindman/largeness.hpp"
#include "hindman/oracle.hpp"
#include "hindman/tree.hpp"
#include "support.hpp"

using namespace hindman;
using hindman::testing::multiples;

namespace {

// Pinned limits, in seconds.
constexpr double kAxiomSeconds = 30;
constexpr double kPfipSeconds = 10;
constexpr double kSplitSeconds = 30;
constexpr double kLemmaSeconds = 60;
constexpr double kStarSeconds = 60;
constexpr double kTreeOracleSeconds = 60;
constexpr double kThresholdSeconds = 120;
constexpr double kCertificateSeconds = 10;
constexpr double kPerformanceSeconds = 10;

// Pinned sizes and rates.
constexpr std::size_t kAxiomSamples = 10000;
constexpr double kMinPartitionRate = 0.99;
constexpr std::size_t kPfipFamilies = 500;
constexpr std::size_t kPfipMaxMembers = 6;
constexpr std::size_t kSplitInstances = 10000;
constexpr std::size_t kLemmaInstances = 100;
constexpr std::size_t kCertificates = 100;
constexpr std::size_t kTampers = 100;

// Regression values computed by independent enumeration and then frozen.
constexpr std::size_t kThresholdR2D2 = 10;
constexpr std::size_t kStarFullMax = 16;  // B = [0, 16] for A = [0, 64)

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<DivProp> shipped_props(Universe u) {
  return {DivProp::infinite(8), DivProp::banach(Rational::make(1, 2), 16), DivProp::syndetic(4, 32),
          DivProp::recip(Rational::make(2, 1)), DivProp::hitset(multiples(u.size(), 5, 3))};
}

Outcome axioms() {
  const Universe u(256);
  Outcome out{true, ""};
  for (const auto& base : shipped_props(u)) {
    const DivProp p = base.with_margin(64);
    const AxiomReport r = axiom_report(p, u, kAxiomSamples, 1);
    bool ok = r.axioms[0].failures == 0 && r.axioms[1].failures == 0 && r.axioms[2].failures == 0;
    const auto& part = r.axioms[3];
    if (p.variant() == Variant::HitSet)
      ok = ok && part.level == CheckLevel::Exact && part.failures == 0;
    else
      ok = ok && part.pass_rate() >= kMinPartitionRate;
    if (p.variant() == Variant::Syndetic || p.variant() == Variant::Banach)
      ok = ok && r.axioms[4].level != CheckLevel::NotApplicable && r.axioms[4].checked > 0 &&
           r.axioms[4].failures == 0;
    ok = ok && r.all_passed();
    std::ostringstream os;
    os << p.describe() << " partition=" << part.pass_rate() << " shift=" << r.axioms[4].checked - r.axioms[4].failures
       << "/" << r.axioms[4].checked << "; ";
    out.detail += os.str();
    out.pass = out.pass && ok;
  }
  return out;
}

Outcome pfip_agreement() {
  const Universe u(64);
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::uint64_t seed = 100;
  for (const auto& p : shipped_props(u)) {
    const OracleReport r = check_pfip_agreement(u, p, kPfipFamilies, kPfipMaxMembers, seed++);
    checked += r.checked;
    mismatches += r.mismatches.size();
  }
  return {mismatches == 0 && checked == kPfipFamilies * 5,
          std::to_string(checked - mismatches) + "/" + std::to_string(checked) + " agree"};
}

Outcome split_hitset() {
  const Universe u(128);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> members(1, 5);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  std::size_t failures = 0;
  std::size_t done = 0;
  while (done < kSplitInstances) {
    const IntSet w = hindman::testing::random_set(u, rng, density(rng)) | IntSet::from_members(u, std::vector<std::int64_t>{127});
    const DivProp p = DivProp::hitset(w);
    const std::vector<std::int64_t> ws = w.members();
    const auto anchor = static_cast<std::size_t>(ws[rng() % ws.size()]);
    std::vector<IntSet> sets;
    for (std::size_t i = members(rng); i > 0; --i) {
      IntSet s = hindman::testing::random_set(u, rng, density(rng));
      s.insert(anchor);
      sets.push_back(std::move(s));
    }
    const SetFamily family(u, std::move(sets));
    const IntSet a = hindman::testing::random_set(u, rng, density(rng));
    ++done;
    try {
      const SplitResult r = split_extend(family, a, p);
      if (!pfip(r.family, p) || !pfip_oracle(r.family, p)) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(done - failures) + "/" + std::to_string(done) + " split"};
}

Outcome lemma_postcondition() {
  std::mt19937_64 rng(4);
  std::size_t solved = 0;
  std::size_t failures = 0;
  std::size_t drawn = 0;
  while (solved + failures < kLemmaInstances && drawn < 100 * kLemmaInstances) {
    ++drawn;
    auto inst = hindman::testing::lemma31_instance(64, rng);
    if (!inst) continue;
    try {
      const Lemma31Result r = lemma31(inst->u, inst->a, inst->s, inst->p);
      const bool ok = r.y.contains(0) && r.conclusion.size() <= kPfipOracleMaxMembers &&
                      pfip_oracle(r.conclusion, inst->p);
      ok ? ++solved : ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }
  return {solved == kLemmaInstances, std::to_string(solved) + "/" + std::to_string(kLemmaInstances) +
                                         " instances with 0 in Y and oracle-checked conclusion"};
}

Outcome star_soundness() {
  const Universe u(64);
  const DivProp p = DivProp::infinite(5);
  LargenessConfig cfg;
  cfg.depth = 1;
  const IntSet evens = multiples(64, 2);
  const IntSet full = IntSet::full(u);
  bool ok = true;
  std::string detail;
  for (const auto& [name, a, expected] :
       {std::tuple{"evens", evens, evens & IntSet::range(u, 0, kStarFullMax + 1)},
        std::tuple{"full", full, IntSet::range(u, 0, kStarFullMax + 1)}}) {
    const StarSet st = star_set(a, SetFamily::trivial(u), p, cfg);
    std::size_t rechecked = 0;
    st.branching.for_each([&](std::size_t n) {
      if (is_large(a & shift(a, n), st.family, p, cfg)) ++rechecked;
    });
    const bool this_ok = p.holds(st.branching) && rechecked == st.branching.count() && st.branching == expected;
    ok = ok && this_ok;
    detail += std::string(name) + ": |B|=" + std::to_string(st.branching.count()) + " rechecked=" +
              std::to_string(rechecked) + "; ";
  }
  return {ok, detail};
}

Outcome tree_agreement() {
  const OracleReport a = check_tree_agreement(8, 2, 2, DivProp::infinite(1));
  const OracleReport b = check_tree_agreement(6, 2, 2, DivProp::infinite(2));
  return {a.ok() && b.ok() && a.checked == 128 && b.checked == 32,
          "[1,8) INF(1): " + std::to_string(a.checked - a.mismatches.size()) + "/" + std::to_string(a.checked) +
              ", [1,6) INF(2): " + std::to_string(b.checked - b.mismatches.size()) + "/" +
              std::to_string(b.checked)};
}

// Smallest n for which every 2-coloring of [1, n) admits a depth-2 tree,
// decided by the brute-force tree oracle alone.
std::optional<std::size_t> oracle_threshold(std::size_t r, std::size_t d, const DivProp& p) {
  for (std::size_t n = 1; n <= kTreeOracleMaxN; ++n) {
    bool all = true;
    enumerate_colorings(n, r, false, [&](const Coloring& c) {
      all = tree_oracle(c, p, d);
      return all;
    });
    if (all) return n;
  }
  return std::nullopt;
}

Outcome threshold_regression() {
  const DivProp p = DivProp::infinite(1);
  const ThresholdResult fast = threshold(2, 2, p, kTreeOracleMaxN);
  const auto slow = oracle_threshold(2, 2, p);
  const bool ok = fast.n && slow && *fast.n == *slow && *fast.n == kThresholdR2D2;
  return {ok, "threshold=" + (fast.n ? std::to_string(*fast.n) : std::string("none")) +
                  " oracle=" + (slow ? std::to_string(*slow) : std::string("none")) +
                  " pinned=" + std::to_string(kThresholdR2D2)};
}

Certificate tampered(const Certificate& cert, const Coloring& c, std::size_t which) {
  Certificate t = cert;
  switch (which % 5) {
    case 0: t.color = (t.color + 1) % c.r(); break;
    case 1: ++t.depth; break;
    case 2: t.prop = DivProp::infinite(static_cast<std::int64_t>(c.n())); break;
    case 3: {
      for (auto& node : t.tree.nodes)
        if (!node.empty()) {
          node.back() = static_cast<std::int64_t>(c.n());
          break;
        }
      break;
    }
    default: t.coloring_digest[0] = t.coloring_digest[0] == '0' ? '1' : '0'; break;
  }
  return t;
}

bool rejected(const Certificate& cert, const Coloring& c, const DivProp& p) {
  try {
    return !verify_tree(cert, c, p);
  } catch (const Error& e) {
    return e.kind() == ErrorKind::DigestMismatch;
  }
}

Outcome certificates() {
  std::mt19937_64 rng(8);
  std::size_t round_trips = 0;
  std::size_t rejections = 0;
  std::size_t attempts = 0;
  while (round_trips < kCertificates && attempts < 20 * kCertificates) {
    ++attempts;
    const std::size_t n = 16 + rng() % 32;
    std::vector<std::size_t> colors(n - 1);
    for (auto& x : colors) x = (rng() % 5 == 0) ? 1 : 0;
    const Coloring c(n, 2, colors);
    const DivProp p = DivProp::infinite(1 + static_cast<std::int64_t>(rng() % 2));
    std::optional<Certificate> cert;
    try {
      cert = build_tree(c, p, 2, SearchMode::Exact);
    } catch (const Error&) {
      continue;
    }
    const Certificate back = certificate_from_json(to_json(*cert));
    if (back == *cert && verify_tree(back, c, p)) ++round_trips;
    if (round_trips <= kTampers && rejected(tampered(back, c, round_trips), c, p)) ++rejections;
  }
  return {round_trips == kCertificates && rejections == kTampers,
          std::to_string(round_trips) + " round trips, " + std::to_string(rejections) + "/" +
              std::to_string(kTampers) + " tampers rejected"};
}

Outcome performance() {
  std::mt19937_64 rng(9);
  std::vector<std::size_t> colors(1999);
  for (auto& x : colors) x = rng() % 3;
  const Coloring c(2000, 3, colors);
  const DivProp p = DivProp::syndetic(4, 32);
  try {
    const Certificate cert = build_tree(c, p, 3, SearchMode::Exact);
    return {verify_tree(cert, c, p), "certificate"};
  } catch (const Error& e) {
    return {e.kind() == ErrorKind::NoTree, std::string(to_string(e.kind()))};
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "axiom suite", kAxiomSeconds, axioms},
      {2, "fip reduction vs oracle", kPfipSeconds, pfip_agreement},
      {3, "split with HITSET", kSplitSeconds, split_hitset},
      {4, "lemma post-condition", kLemmaSeconds, lemma_postcondition},
      {5, "star-set soundness", kStarSeconds, star_soundness},
      {6, "tree search vs oracle", kTreeOracleSeconds, tree_agreement},
      {7, "threshold regression", kThresholdSeconds, threshold_regression},
      {8, "certificate integrity", kCertificateSeconds, certificates},
      {9, "exact search performance", kPerformanceSeconds, performance},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.limit;
    all = all && pass;
    std::printf("criterion %d: %s %s (%.2fs, limit %.0fs) %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs,
                c.limit, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
