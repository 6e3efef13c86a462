#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hindman/coloring.hpp"
#include "hindman/divprop.hpp"
#include "hindman/largeness.hpp"

namespace hindman {

/// Prefix-closed set of strictly increasing sequences; each sequence encodes
/// a finite set F, and its children are F + {n} with n > max(F).
struct DenseTree {
  /// Lexicographically sorted; the root [] comes first.
  std::vector<std::vector<std::int64_t>> nodes;

  friend bool operator==(const DenseTree&, const DenseTree&) = default;
};

struct Certificate {
  std::size_t color = 0;
  std::size_t depth = 0;
  DivProp prop;
  DenseTree tree;
  std::string coloring_digest;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class SearchMode { Exact, Guided };

std::string to_string(SearchMode mode);
SearchMode search_mode_from_string(const std::string& name);

/// Whether some color admits a tree of the given depth (exact engine, no
/// certificate built).
bool tree_exists(const Coloring& c, const DivProp& p, std::size_t depth);

/// Builds a certificate: a color i and a tree in which every node F has all
/// nonzero finite sums in color i (and below n), and every node above the
/// leaves has a child set satisfying P.
///
/// Exact mode backtracks over colors and extensions in ascending order and is
/// complete; it keeps every valid child (the maximal branching sets). Throws
/// NoTree when refuted. Guided mode replays the largeness argument (color
/// split, then repeated star sets) and throws GuidedFailed when a step breaks
/// down at finite scale.
Certificate build_tree(const Coloring& c, const DivProp& p, std::size_t depth, SearchMode mode,
                       const LargenessConfig& cfg = {});

/// Independent checker for certificates. Throws DigestMismatch when the
/// certificate was issued for a different coloring.
bool verify_tree(const Certificate& cert, const Coloring& c, const DivProp& p);

/// Drops every node deeper than `depth`.
Certificate truncate(const Certificate& cert, std::size_t depth);

struct ThresholdResult {
  /// Smallest n such that every r-coloring of [1, n) admits a depth-d tree.
  std::optional<std::size_t> n;
  /// A coloring of [1, n - 1) admitting no tree (the last refuted size when
  /// nothing was found).
  std::optional<Coloring> hardest;
  std::uint64_t colorings_checked = 0;
};

/// Scans n = 1..n_max with the color of 1 fixed to 0. The result does not
/// depend on `jobs`.
ThresholdResult threshold(std::size_t r, std::size_t d, const DivProp& p, std::size_t n_max,
                          std::size_t jobs = 1);

}  // namespace hindman
