#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hindman/coloring.hpp"
#include "hindman/divprop.hpp"
#include "hindman/family.hpp"

namespace hindman {

// Brute-force references. None of these reuse the fast paths' traversal or
// set arithmetic; they exist to be slow and obviously right.

inline constexpr std::size_t kPfipOracleMaxMembers = 20;
inline constexpr std::size_t kTreeOracleMaxN = 12;
inline constexpr std::size_t kTreeOracleMaxDepth = 3;
inline constexpr std::uint64_t kDefaultColoringCap = std::uint64_t{1} << 24;

/// Conjunction of holds(P, intersection of F) over every nonempty F subset U.
/// Throws TooLarge above kPfipOracleMaxMembers members.
bool pfip_oracle(const SetFamily& u, const DivProp& p);

/// Enumerates every choice of child set at every node. Throws TooLarge when
/// c.n() > 12 or depth > 3.
bool tree_oracle(const Coloring& c, const DivProp& p, std::size_t depth);

/// Number of colorings enumerate_colorings would emit (saturating).
std::uint64_t coloring_count(std::size_t n, std::size_t r, bool prune);

/// Visits every r-coloring of [1, n) in lexicographic order (the color of 1
/// fixed to 0 when `prune`). `visit` returns false to stop early. Throws
/// CapExceeded when the count would exceed `cap`. Returns the number visited.
std::uint64_t enumerate_colorings(std::size_t n, std::size_t r, bool prune,
                                  const std::function<bool(const Coloring&)>& visit,
                                  std::uint64_t cap = kDefaultColoringCap);

struct OracleMismatch {
  std::string input;
  std::string fast;
  std::string oracle;
};

struct OracleReport {
  std::uint64_t checked = 0;
  std::vector<OracleMismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// pfip vs pfip_oracle on random families of 1..max_members dense sets.
OracleReport check_pfip_agreement(Universe u, const DivProp& p, std::size_t families,
                                  std::size_t max_members, std::uint64_t seed);

/// tree_exists (exact engine) vs tree_oracle over every r-coloring of [1, n).
OracleReport check_tree_agreement(std::size_t n, std::size_t r, std::size_t depth, const DivProp& p);

}  // namespace hindman
