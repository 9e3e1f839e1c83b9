#include <doctest.h>

#include "support/alexander.hpp"
#include "vkit/chords.hpp"
#include "vkit/codec.hpp"
#include "vkit/corpus.hpp"
#include "vkit/error.hpp"
#include "vkit/oracles.hpp"
#include "vkit/plat.hpp"

using namespace vkit;

namespace {
const BaseOracle& c2() {
  static const BaseOracle oracle = c2_oracle(ArrowConfiguration{});
  return oracle;
}
}  // namespace

TEST_CASE("configuration text") {
  ArrowConfiguration c{ArrowShape::Nested, Visit::Under, Visit::Over, -1};
  CHECK(parse_configuration(format_configuration(c)) == c);
  CHECK(c.name() == "nested-under-over");
  CHECK(candidate_configurations().size() == 12);
  CHECK_THROWS_AS(parse_configuration("shape round\n"), Error);
}

TEST_CASE("c2 agrees with the alexander oracle on braid closures") {
  const std::vector<std::pair<int, std::vector<int>>> braids{
      {2, {1, 1, 1}}, {2, {-1, -1, -1}}, {3, {1, -2, 1, -2}}, {2, {1, 1, 1, 1, 1}},
      {3, {1, 1, 1, 2, -1, 2}}, {3, {1, 2, 1, 2, 1, 2, 1, 2}}, {4, {1, -2, 3}}};
  for (const auto& [strands, gens] : braids) {
    const auto code = pd_to_gauss(*trace_plat(braid_closure(strands, gens)));
    CHECK(c2()(code) == InvariantValue(testing_oracle::alexander_c2(code)));
  }
  CHECK(testing_oracle::alexander_c2(trefoil_code()) == 1);
  CHECK(c2()(trefoil_code()) == InvariantValue(Rational(1)));
}

TEST_CASE("twist knots") {
  // Conway z^2 coefficient of twist knots alternates in sign and grows by one
  // every two twists.
  for (int n = 3; n <= 12; ++n) {
    const auto code = pd_to_gauss(twist_knot(n));
    CHECK(c2()(code) == InvariantValue(testing_oracle::alexander_c2(code)));
  }
}

TEST_CASE("naive singular evaluation") {
  const auto s = make_singular(trefoil_code(), 2);
  const auto v = naive_singular_eval(s, c2());
  CHECK(v == c2()(resolve_double(s, 1, Branch::Positive)) - c2()(resolve_double(s, 1, Branch::Negative)));
  CHECK(naive_singular_eval(parse_gauss("D1 D2 D1 D3 D2 D3"), c2()).is_zero());
}

TEST_CASE("c2 actuality table") {
  const auto t = build_actuality_table(2, c2());
  CHECK(t.size() == 5);
  CHECK(t.complete());
  CHECK(t.lookup("").is_zero());
  CHECK(t.lookup("AA").is_zero());
  CHECK(t.lookup("AABB").is_zero());
  CHECK(t.lookup("ABBA").is_zero());
  CHECK(t.lookup("ABAB") == InvariantValue(Rational(1)));
  const auto f = formal_table(2);
  CHECK(f.lookup("ABBA") == InvariantValue::basis("ABBA"));
}

TEST_CASE("selection on the bundled corpus") {
  const auto rep = select_configuration(load_corpus(data_dir() + "/corpus.txt"));
  REQUIRE_FALSE(rep.survivors.empty());
  CHECK(rep.chosen.name() == "interleaved-over-under");
  CHECK(rep.survivors.size() == 2);
  CHECK(c2_oracle(rep.chosen)(trefoil_code()) == InvariantValue(Rational(1)));
}
