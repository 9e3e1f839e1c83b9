#include <doctest.h>

#include <limits>

#include "vkit/error.hpp"
#include "vkit/value.hpp"

using namespace vkit;

TEST_CASE("numeric values") {
  const auto a = parse_value("3/6");
  CHECK(a.to_string() == "1/2");
  CHECK((a + parse_value("-1/2")).is_zero());
  CHECK(parse_value("-4").norm() == 4);
}

TEST_CASE("formal values") {
  auto v = InvariantValue::basis("AA");
  v += InvariantValue::basis("");
  v += InvariantValue::basis("AA");
  CHECK(v.to_string() == "e[] + 2*e[AA]");
  v -= InvariantValue::basis("ABAB");
  CHECK(v.norm() == 4);
  auto w = v;
  w -= v;
  CHECK(w.is_zero());
  CHECK(w.to_string() == "0");
  CHECK(parse_value("e[ABAB]") == InvariantValue::basis("ABAB"));
}

TEST_CASE("kinds never mix") {
  auto n = parse_value("1");
  CHECK_THROWS_AS(n += InvariantValue::basis("AA"), Error);
}

TEST_CASE("formal overflow is detected") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), Error);
  CHECK_THROWS_AS(checked_mul(big, 2), Error);
  CHECK(checked_add(big, -1) == big - 1);
}
