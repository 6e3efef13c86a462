#include "hindman/coloring.hpp"

#include <openssl/evp.h>

#include <array>
#include <memory>
#include <sstream>

#include "hindman/error.hpp"

namespace hindman {

Coloring::Coloring(std::size_t n, std::size_t r, std::vector<std::size_t> colors)
    : n_(n), r_(r), colors_(std::move(colors)) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "coloring needs n >= 1");
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "coloring needs r >= 1");
  if (colors_.size() != n - 1)
    throw Error(ErrorKind::InvalidArgument, "coloring of [1, " + std::to_string(n) + ") needs " +
                                                std::to_string(n - 1) + " colors, got " +
                                                std::to_string(colors_.size()));
  for (const auto c : colors_)
    if (c >= r) throw Error(ErrorKind::InvalidArgument, "color " + std::to_string(c) + " >= r");
}

Coloring Coloring::monochromatic(std::size_t n) {
  return Coloring(n, 1, std::vector<std::size_t>(n == 0 ? 0 : n - 1, 0));
}

std::size_t Coloring::color_of(std::int64_t x) const {
  if (x < 1 || static_cast<std::size_t>(x) >= n_)
    throw Error(ErrorKind::InvalidArgument, "no color for " + std::to_string(x));
  return colors_[static_cast<std::size_t>(x) - 1];
}

IntSet Coloring::color_class(std::size_t i) const {
  IntSet s(universe());
  for (std::size_t x = 1; x < n_; ++x)
    if (colors_[x - 1] == i) s.insert(x);
  return s;
}

std::string coloring_digest(const Coloring& c) {
  std::ostringstream canon;
  canon << "n=" << c.n() << ";r=" << c.r() << ";colors=";
  for (std::size_t i = 0; i < c.colors().size(); ++i) canon << (i ? "," : "") << c.colors()[i];
  const std::string text = canon.str();

  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), text.data(), text.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1)
    throw Error(ErrorKind::InvalidArgument, "SHA-256 unavailable");

  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[md[i] >> 4]);
    hex.push_back(kHex[md[i] & 0xF]);
  }
  return hex;
}

}  // namespace hindman
