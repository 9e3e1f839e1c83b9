#include <doctest.h>

#include "vkit/chords.hpp"
#include "vkit/codec.hpp"
#include "vkit/error.hpp"
#include "vkit/exposing.hpp"
#include "vkit/oracles.hpp"
#include "vkit/plat.hpp"

using namespace vkit;

TEST_CASE("pd validation") {
  CHECK_NOTHROW(parse_pd("X 1 3 2 2"));
  CHECK_THROWS_AS(parse_pd("X 1 3 2"), Error);
  CHECK_THROWS_AS(parse_pd("X 1 3 2 9"), Error);
  CHECK_THROWS_AS(parse_pd("Q 1 3 2 2"), Error);
  const auto pd = parse_pd("X 1 3 2 2");
  CHECK(faces(pd).size() == 3);
  CHECK(parse_pd(format_pd(pd)) == pd);
}

TEST_CASE("euler count on twist knots") {
  for (int n = 2; n <= 9; ++n) {
    const auto pd = twist_knot(n);
    CHECK(pd.vertex_count() == n);
    CHECK(static_cast<int>(faces(pd).size()) == pd.vertex_count() + 2);
    int sides = 0;
    for (const auto& f : faces(pd)) sides += static_cast<int>(f.darts.size());
    CHECK(sides == 2 * pd.edge_count());
  }
}

TEST_CASE("routing and pulling") {
  int pulled = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto pd = random_planar_knot(7, 2, seed);
    const auto un = unexposed_doubles(pd);
    const auto [paths, rep] = route_exposing_paths(pd, un);
    CHECK(rep.total_intersections <= rep.bound);
    CHECK(static_cast<int>(paths.size()) == rep.k_unexposed);
    for (const auto& p : paths) {
      CHECK_NOTHROW(validate_path(pd, face_structure(pd), p));
      const auto res = pull_double_point(pd, p);
      CHECK(extract(pd_to_gauss(res.diagram)) == extract(pd_to_gauss(pd)));
      CHECK(unexposed_doubles(res.diagram).size() < un.size());
      ++pulled;
    }
    CHECK(unexposed_doubles(expose_all(pd).diagram).empty());
  }
  CHECK(pulled > 0);
}

TEST_CASE("invalid paths are rejected") {
  for (std::uint64_t seed = 0;; ++seed) {
    const auto pd = random_planar_knot(6, 1, seed);
    const auto un = unexposed_doubles(pd);
    if (un.empty()) continue;
    auto path = route_exposing_paths(pd, un).first.front();
    path.steps.pop_back();
    CHECK_THROWS_AS(validate_path(pd, face_structure(pd), path), Error);
    break;
  }
}

TEST_CASE("report json") {
  const auto rep = route_exposing_paths(twist_knot(3), {}).second;
  CHECK(rep.json().find("\"bound\"") != std::string::npos);
}
