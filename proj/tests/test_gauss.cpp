#include <doctest.h>

#include "vkit/chords.hpp"
#include "vkit/codec.hpp"
#include "vkit/error.hpp"
#include "vkit/gauss.hpp"

using namespace vkit;

TEST_CASE("crossing change and singularisation") {
  const auto k = parse_gauss("O1+ U2- U1+ O2-");
  const auto c = change_crossing(k, 1);
  CHECK(format_gauss(c) == "U1- U2- O1- O2-");
  CHECK(change_crossing(c, 1) == k);
  const auto s = make_singular(k, 2);
  CHECK(format_gauss(s) == "O1+ D1 U1+ D1");
  CHECK(s.crossings() == 1);
  CHECK_THROWS_AS(change_crossing(k, 7), Error);
}

TEST_CASE("resolution branches") {
  const auto s = parse_gauss("D3 O1+ D3 U1+");
  CHECK(format_gauss(resolve_double(s, 3, Branch::Positive)) == "O2+ O1+ U2+ U1+");
  CHECK(format_gauss(resolve_double(s, 3, Branch::Negative)) == "U2- O1+ O2- U1+");
  CHECK_THROWS_AS(resolve_double(s, 1, Branch::Positive), Error);
}

TEST_CASE("descending path on the trefoil") {
  const auto k = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK_FALSE(is_descending(k));
  const auto path = descending_path(k);
  CHECK(is_descending(path.terminal));
  REQUIRE(path.events.size() == 1);
  CHECK(path.events[0].sign == 1);
  CHECK(path.events[0].diagram.doubles() == 1);
  CHECK(descending_path(path.terminal).events.empty());
}

TEST_CASE("stacked target agrees with descending without double points") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto k = random_diagram(8, 0, seed);
    CHECK(descending_path(k).terminal == stacked_path(k).terminal);
  }
  const auto s = parse_gauss("U1+ D1 O1+ D1");
  CHECK(is_stacked(s));
  CHECK_FALSE(is_descending(s));
  CHECK(nesting_depths(s) == std::vector<int>{0, 0, 1, 0});
  CHECK_FALSE(is_stacked(parse_gauss("D1 U1+ D1 O1+")));
}

TEST_CASE("reidemeister moves") {
  const auto k = parse_gauss("O1+ U1+");
  const auto r1 = apply_rmove(k, {RMoveKind::R1Plus, {1}, Visit::Under, -1});
  CHECK(format_gauss(r1) == "O1+ U2- O2- U1+");
  CHECK(apply_rmove(r1, {RMoveKind::R1Minus, {1}}) == k);
  RMove r2{RMoveKind::R2Plus, {0, 2}, Visit::Over, 1};
  const auto two = apply_rmove(k, r2);
  CHECK(two.crossings() == 3);
  CHECK_FALSE(rmove_sites(two, RMoveKind::R2Minus).empty());
  CHECK_THROWS_AS(apply_rmove(k, {RMoveKind::R1Minus, {1}}), Error);
}

TEST_CASE("random diagrams are seeded") {
  CHECK(random_diagram(10, 2, 5) == random_diagram(10, 2, 5));
  CHECK(random_diagram(10, 2, 5).vertices() == 12);
  CHECK(extract(random_diagram(0, 3, 1)).degree() == 3);
}
