#include "doctest.h"
#include "hindman/error.hpp"
#include "hindman/oracle.hpp"
#include "hindman/tree.hpp"
#include "support.hpp"

using namespace hindman;
using hindman::testing::set_of;

TEST_SUITE("oracle") {

TEST_CASE("coloring enumeration counts") {
  auto count = [](std::size_t n, std::size_t r, bool prune) {
    return enumerate_colorings(n, r, prune, [](const Coloring&) { return true; });
  };
  CHECK(count(3, 2, false) == 4);
  CHECK(count(3, 2, true) == 2);
  CHECK(count(1, 3, false) == 1);
  CHECK(count(1, 3, true) == 1);
  for (std::size_t n = 1; n <= 7; ++n)
    for (std::size_t r = 1; r <= 3; ++r) {
      CHECK(count(n, r, false) == coloring_count(n, r, false));
      CHECK(count(n, r, true) == coloring_count(n, r, true));
    }
  CHECK(coloring_count(6, 3, true) == 81);
  CHECK(coloring_count(6, 3, false) == 243);
}

TEST_CASE("coloring enumeration is lexicographic and pruned on the first color") {
  std::vector<std::vector<std::size_t>> seen;
  enumerate_colorings(4, 2, true, [&](const Coloring& c) {
    seen.emplace_back(c.colors().begin(), c.colors().end());
    return true;
  });
  const std::vector<std::vector<std::size_t>> expected{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}};
  CHECK(seen == expected);
}

TEST_CASE("coloring enumeration stops early and respects the cap") {
  int visits = 0;
  const auto visited = enumerate_colorings(6, 2, false, [&](const Coloring&) { return ++visits < 3; });
  CHECK(visited == 3);
  try {
    enumerate_colorings(30, 3, false, [](const Coloring&) { return true; });
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("pfip oracle examples") {
  const Universe u(64);
  const IntSet x = set_of(64, {1, 2, 3});
  CHECK_FALSE(pfip_oracle(SetFamily(u, {x, signed_set(Sign::Minus, x)}), DivProp::infinite(1)));
  CHECK(pfip_oracle(SetFamily::trivial(u), DivProp::infinite(5)));
  std::vector<IntSet> many;
  for (std::size_t i = 0; i < 21; ++i) many.push_back(set_of(64, {static_cast<std::int64_t>(i)}));
  CHECK_THROWS_AS(pfip_oracle(SetFamily(u, many), DivProp::infinite(1)), Error);
}

TEST_CASE("tree oracle examples") {
  // Node {2} below the root keeps only child 3 once sums must stay under 12.
  CHECK_FALSE(tree_oracle(Coloring::monochromatic(12), DivProp::infinite(2), 3));
  CHECK(tree_oracle(Coloring::monochromatic(12), DivProp::infinite(2), 2));
  CHECK(tree_oracle(Coloring::monochromatic(12), DivProp::infinite(1), 3));
  CHECK_FALSE(tree_oracle(Coloring(4, 2, {0, 1, 1}), DivProp::infinite(1), 2));
  CHECK(tree_oracle(Coloring(4, 2, {0, 1, 1}), DivProp::infinite(1), 1));
  CHECK_THROWS_AS(tree_oracle(Coloring::monochromatic(13), DivProp::infinite(1), 2), Error);
  CHECK_THROWS_AS(tree_oracle(Coloring::monochromatic(8), DivProp::infinite(1), 4), Error);
}

TEST_CASE("tree oracle agrees with exact search on all 2-colorings of [1, 8)") {
  const OracleReport r = check_tree_agreement(8, 2, 2, DivProp::infinite(1));
  CHECK(r.checked == 128);
  CHECK(r.ok());
}

TEST_CASE("pfip agreement report") {
  const OracleReport r =
      check_pfip_agreement(Universe(64), DivProp::syndetic(2, 6), 100, 6, 17);
  CHECK(r.checked == 100);
  CHECK(r.ok());
}

}
