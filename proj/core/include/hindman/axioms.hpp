#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "hindman/divprop.hpp"
#include "hindman/intset.hpp"

namespace hindman {

enum class CheckLevel { Exact, Relaxed, NotApplicable };

std::string to_string(CheckLevel level);

struct AxiomResult {
  int index = 0;
  std::string name;
  CheckLevel level = CheckLevel::Exact;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  /// Fraction of checks that must pass for the axiom to count as passing.
  double required_rate = 1.0;

  double pass_rate() const noexcept;
  bool passed() const noexcept;
};

struct AxiomReport {
  std::string property;
  std::size_t universe = 0;
  std::size_t margin = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::array<AxiomResult, 5> axioms;

  bool all_passed() const noexcept;
};

/// What the harness needs from a property. Lets tests plug in deliberately
/// broken predicates to check that the harness notices.
struct PropertyModel {
  std::string name;
  std::function<bool(const IntSet&)> holds;
  /// Evaluated on the parts of a partition (axiom 4).
  std::function<bool(const IntSet&)> holds_relaxed;
  bool partition_exact = false;
  /// Empty when the property is not shift invariant (axiom 5 n/a).
  std::function<bool(const IntSet&, std::size_t)> witnessed_within;
  std::size_t margin = 0;
};

PropertyModel model_of(const DivProp& p, Universe u);

/// Sampled audit of the five defining axioms:
///   1. universe satisfies P          (exact)
///   2. empty set fails P             (exact)
///   3. monotone under supersets      (exact, sampled pairs X subset Y)
///   4. partition regular             (exact for HITSET, else parameter-halved)
///   5. shift invariant               (one-directional, shifts 0..M, witnesses
///                                     inside [n, N) must survive shifting)
/// Failures are counted, never thrown.
AxiomReport axiom_report(const PropertyModel& model, Universe u, std::size_t sample_count,
                         std::uint64_t seed);
AxiomReport axiom_report(const DivProp& p, Universe u, std::size_t sample_count, std::uint64_t seed);

/// Minimum pass rate for the parameter-halved partition check.
inline constexpr double kRelaxedPartitionRate = 0.99;

}  // namespace hindman
