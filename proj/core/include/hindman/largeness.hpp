#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hindman/divprop.hpp"
#include "hindman/family.hpp"
#include "hindman/intset.hpp"

namespace hindman {

/// Which sets the adversary may adjoin when trying to refute largeness.
enum class AdversaryPool {
  /// Shifts and complemented shifts (n <= M) of the tested set and of every
  /// family member.
  Shifts,
  /// Shifts, plus pairwise intersections of the tested set's shifts.
  ShiftsAndPairs,
};

std::string to_string(AdversaryPool pool);
AdversaryPool adversary_pool_from_string(const std::string& name);

struct LargenessConfig {
  /// Number of adversary moves.
  std::size_t depth = 1;
  AdversaryPool pool = AdversaryPool::ShiftsAndPairs;
  /// Largest family the adversary may build.
  std::size_t budget = 256;
};

/// [0, N - M): the part of the universe whose shifts by up to M are fully
/// observed. Largeness judges P-fip on this core only.
IntSet observed_core(Universe u, const DivProp& p);

/// holds(P, (intersection of V) cap A cap core).
bool core_fip(const SetFamily& v, const IntSet& a, const DivProp& p);

/// Adversary candidates in the order they are tried. Sets already in `u` and
/// empty sets are skipped; duplicates are dropped.
std::vector<IntSet> adversary_pool(const IntSet& a, const SetFamily& u, const DivProp& p,
                                   AdversaryPool pool);

/// A semigroup V extending U, reachable in at most cfg.depth adversary moves
/// (adjoin one pool set, then semigroup_closure), such that V + {A} fails
/// core P-fip. nullopt means A is depth-d large for U.
std::optional<SetFamily> refuting_extension(const IntSet& a, const SetFamily& u, const DivProp& p,
                                            const LargenessConfig& cfg);

/// Depth-d surrogate of "A is large relative to U". Depth 0 is core P-fip of
/// U + {A}. Throws PreconditionFailed unless U is a P-semigroup.
bool is_large(const IntSet& a, const SetFamily& u, const DivProp& p, const LargenessConfig& cfg);

struct ColorSplit {
  std::size_t index;
  SetFamily family;
};

/// Walks the colors in order; whenever a color is refuted, continues from
/// the refuting extension. Throws PreconditionFailed or NoColor.
ColorSplit color_split(std::span<const IntSet> colors, const SetFamily& u, const DivProp& p,
                       const LargenessConfig& cfg);

struct StarSet {
  /// Semigroup extending U.
  SetFamily family;
  /// {n in A cap [0, M] | A cap (A - n) is large for `family`}.
  IntSet branching;
  /// The greedy maximal S, 0 first.
  IntSet s;
};

/// Builds V extending U so that the n in A for which A cap (A - n) stays
/// large form a set in P. Throws PreconditionFailed or StarFailed.
StarSet star_set(const IntSet& a, const SetFamily& u, const DivProp& p, const LargenessConfig& cfg);

}  // namespace hindman
