#include <doctest.h>

#include "vkit/chords.hpp"
#include "vkit/codec.hpp"
#include "vkit/error.hpp"
#include "vkit/evaluator.hpp"
#include "vkit/oracles.hpp"
#include "vkit/plat.hpp"

using namespace vkit;

namespace {
const ActualityTable& c2_table() {
  static const ActualityTable t = build_actuality_table(2, c2_oracle(ArrowConfiguration{}));
  return t;
}
}  // namespace

TEST_CASE("trefoil and figure eight") {
  EvalConfig cfg{2, c2_table()};
  CHECK(eval(trefoil_code(), cfg).value == InvariantValue(Rational(1)));
  const auto fig8 = pd_to_gauss(twist_knot(4));
  CHECK(eval(fig8, cfg).value == InvariantValue(Rational(-1)));
  CHECK(eval(SingularGaussCode(), cfg).value.is_zero());
}

TEST_CASE("type zero returns the unknot value") {
  ActualityTable t(0);
  t.insert(ChordDiagram(""), InvariantValue(Rational(7)));
  const auto r = eval(trefoil_code(), {0, t});
  CHECK(r.value == InvariantValue(Rational(7)));
  CHECK(r.trace.table_lookups == 1);
}

TEST_CASE("formal coefficients") {
  const auto r = eval(trefoil_code(), {2, formal_table(2)});
  CHECK(r.value.to_string() == "e[] + e[AA] + e[ABAB]");
  CHECK(r.coefficients.at("ABAB") == 1);
}

TEST_CASE("too many double points vanish without lookups") {
  const auto r = eval(parse_gauss("D1 D2 D1 D3 D2 D3"), {2, c2_table()});
  CHECK(r.value.is_zero());
  CHECK(r.trace.table_lookups == 0);
}

TEST_CASE("missing table entries surface") {
  ActualityTable t(1);
  t.insert(ChordDiagram(""), InvariantValue(Rational(0)));
  try {
    eval(trefoil_code(), {1, t});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LookupMiss);
  }
}

TEST_CASE("trace bounds") {
  const auto code = random_diagram(12, 1, 3);
  const auto r = eval(code, {2, c2_table()});
  const auto rep = check_bounds(r.trace, r.value);
  CHECK(rep.ok());
  CHECK(rep.a_max <= 1);
  CHECK(r.trace.nodes_per_level.size() == 3);
  CHECK(trace_json(r.trace, r.value).find("\"elementary_ops\"") != std::string::npos);
}

TEST_CASE("scaling csv") {
  const auto rows = scaling_experiment(Family::Twist, {8, 4}, 1, 1, 0, formal_table(1));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 4);
  const auto csv = scaling_csv(rows);
  CHECK(csv.rfind("n,trial,m,elementary_ops,nodes,value_norm,a_max,b_max\n", 0) == 0);
  CHECK(loglog_slope({1, 2, 4}, {3, 6, 12}) == doctest::Approx(1.0));
}
