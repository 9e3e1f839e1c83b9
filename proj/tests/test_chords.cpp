#include <doctest.h>

#include "vkit/chords.hpp"
#include "vkit/codec.hpp"
#include "vkit/error.hpp"

using namespace vkit;

TEST_CASE("canonical words") {
  CHECK(is_canonical(""));
  CHECK(is_canonical("ABAB"));
  CHECK_FALSE(is_canonical("BAAB"));
  CHECK_FALSE(is_canonical("ABA"));
  CHECK(canonical_word({7, 3, 7, 3}) == "ABAB");
  CHECK_THROWS_AS(ChordDiagram("BB"), Error);
}

TEST_CASE("enumeration sizes are double factorials") {
  CHECK(enumerate(0).size() == 1);
  CHECK(enumerate(1).size() == 1);
  CHECK(enumerate(2).size() == 3);
  CHECK(enumerate(3).size() == 15);
  CHECK(enumerate(4).size() == 105);
  const auto two = enumerate(2);
  CHECK(two[0].word() == "AABB");
  CHECK(two[1].word() == "ABAB");
  CHECK(two[2].word() == "ABBA");
}

TEST_CASE("extract ignores regular crossings") {
  const auto code = parse_gauss("D2 O1+ D5 U1+ D2 D5");
  CHECK(extract(code).word() == "ABAB");
  const auto k = realize_kd(ChordDiagram("ABBA"));
  CHECK(extract(k).word() == "ABBA");
  CHECK(k.crossings() == 0);
}
