#include <doctest.h>

#include "vkit/codec.hpp"
#include "vkit/error.hpp"
#include "vkit/oracles.hpp"

using namespace vkit;

TEST_CASE("gauss tokens round trip") {
  const auto code = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(code.crossings() == 3);
  CHECK(format_gauss(code) == "O1+ U2+ O3+ U1+ O2+ U3+");
  CHECK(parse_gauss("") == SingularGaussCode());
  const auto s = parse_gauss("# comment\nD1 O1- D1\nU1-\n");
  CHECK(s.doubles() == 1);
  CHECK(s.crossing_sign(1) == -1);
}

TEST_CASE("gauss parse errors carry codes") {
  auto code_of = [](const char* text) {
    try {
      parse_gauss(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  CHECK(code_of("O1") == ErrorCode::MalformedToken);
  CHECK(code_of("X1+ U1+") == ErrorCode::MalformedToken);
  CHECK(code_of("O1+ O1+") == ErrorCode::UnbalancedCrossing);
  CHECK(code_of("O1+") == ErrorCode::UnbalancedCrossing);
  CHECK(code_of("O1+ U1-") == ErrorCode::SignMismatch);
  CHECK(code_of("D1 D1 D1") == ErrorCode::UnbalancedCrossing);
}

TEST_CASE("table text round trip") {
  auto t = parse_table("# degree 2\n() 0\nAA 0\nAABB 0\nABAB 1\nABBA 0\n");
  CHECK(t.degree() == 2);
  CHECK(t.lookup("ABAB") == InvariantValue(Rational(1)));
  CHECK(parse_table(serialize_table(t)) == t);
  CHECK_THROWS_AS(parse_table("AA 1\nAA 2\n"), Error);
  CHECK_THROWS_AS(parse_table("AA 1\nAB 2\n"), Error);
  CHECK_THROWS_AS(parse_table("AA 1\nABAB e[ABAB]\n"), Error);
  const auto f = formal_table(2);
  CHECK(parse_table(serialize_table(f)) == f);
}

TEST_CASE("corpus records") {
  const auto rs = parse_corpus("# x\na gauss O1+ U1+\na/r1.0 gauss O1+ U1+ O2- U2-\nb.pd pd X 1 3 2 2\n");
  REQUIRE(rs.size() == 3);
  CHECK(rs[1].parent() == "a");
  CHECK(rs[1].move_class() == "r1");
  CHECK(rs[0].move_class().empty());
  CHECK(rs[2].format == Format::PD);
  CHECK(rs[2].gauss.crossings() == 1);
  CHECK(parse_corpus(format_corpus_record(rs[2]))[0].pd == rs[2].pd);
}

TEST_CASE("missing file is an io error") {
  try {
    read_document("/nonexistent/file", Format::Gauss);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}
