#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hindman/intset.hpp"

namespace hindman {

/// An r-coloring of [1, n). 0 is deliberately uncolored.
class Coloring {
 public:
  /// colors[i] is the color of i + 1; colors.size() must be n - 1.
  Coloring(std::size_t n, std::size_t r, std::vector<std::size_t> colors);

  static Coloring monochromatic(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t r() const noexcept { return r_; }
  std::span<const std::size_t> colors() const noexcept { return colors_; }
  Universe universe() const { return Universe(n_); }

  /// Color of x for 1 <= x < n.
  std::size_t color_of(std::int64_t x) const;
  /// Members of color i, as a subset of [0, n).
  IntSet color_class(std::size_t i) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::size_t n_;
  std::size_t r_;
  std::vector<std::size_t> colors_;
};

/// SHA-256 (hex) of the coloring's canonical content, independent of file
/// formatting.
std::string coloring_digest(const Coloring& c);

}  // namespace hindman
