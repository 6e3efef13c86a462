#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hindman/divprop.hpp"
#include "hindman/family.hpp"
#include "hindman/intset.hpp"

namespace hindman {

/// P-finite intersection property. For a finite family and a monotone P the
/// full intersection is the smallest subfamily intersection, so one check
/// decides every finite subfamily.
bool pfip(const SetFamily& u, const DivProp& p);

/// X ~in U: some finite subfamily's intersection lies inside X.
bool tilde_in(const IntSet& x, const SetFamily& u);

/// (X - n) ~in U, judged only below N - n: positions at or above N - n have
/// no preimage in the universe and are treated as unobserved.
bool tilde_in_shifted(const IntSet& x, std::size_t n, const SetFamily& u);

/// (X - n) with the unobserved top [N - n, N) filled in.
IntSet shift_padded(const IntSet& x, std::size_t n);

struct SplitResult {
  Sign sign;
  SetFamily family;
};

/// Adds A if that keeps P-fip, otherwise -1*A. Throws PreconditionFailed if U
/// itself lacks P-fip and BothFail if neither extension works (impossible for
/// an exactly partition-regular P).
SplitResult split_extend(const SetFamily& u, const IntSet& a, const DivProp& p);

/// P-fip, closure under pairwise intersection, and the shift condition
/// restricted to n <= margin (see tilde_in_shifted).
bool is_semigroup(const SetFamily& u, const DivProp& p);

/// Smallest extension (in deterministic order) that passes is_semigroup:
/// adds pairwise intersections, then for each violated shift condition the
/// padded shift set, until stable. At most `budget` members are added.
/// Throws ClosureFailed when the budget runs out or P-fip breaks.
SetFamily semigroup_closure(const SetFamily& u, const DivProp& p, std::size_t budget);

struct Lemma31Result {
  /// X ~in U used by the construction.
  IntSet x;
  /// Finite F subset of S with X cap (intersection over n in F of S - n) not in P.
  std::vector<std::int64_t> f;
  /// {n <= M | (X - n) ~in U} padded with (M, N); always contains 0.
  IntSet y;
  /// U together with the union over n in F of -1*(A - n - m), for m in Y cap [0, M].
  SetFamily conclusion;
};

/// Transfer step: given a semigroup U such that U + {-1*(A - n) | n not in S}
/// has P-fip while U + {S - n | n in S} does not, finds (X, F, Y) whose
/// conclusion family has P-fip. Candidates X are the full intersection of U
/// then each member; F runs over subsets of S by size (up to 3), then S.
/// Throws PreconditionFailed or NoWitness.
Lemma31Result lemma31(const SetFamily& u, const IntSet& a, const IntSet& s, const DivProp& p);

}  // namespace hindman
