#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vkit/planar.hpp"

namespace vkit {

/// sigma_column^sign acting on columns (column, column+1); positive when the
/// strand from top-right to bottom-left is over (strands running down).
struct BraidLetter {
  int column = 0;
  int sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A plat presentation: caps join columns above and below the word.
struct Plat {
  int width = 2;
  std::vector<std::pair<int, int>> top;
  std::vector<std::pair<int, int>> bottom;
  std::vector<BraidLetter> letters;
};

/// Traces the plat from the top of column 0 going down; nullopt when the
/// closure has more than one component.
std::optional<PlanarDiagram> trace_plat(const Plat& plat);

/// Braid closure on `strands` strands; generators are signed and 1-based.
Plat braid_closure(int strands, const std::vector<int>& generators);

/// Twist knots: t = n-2 half twists followed by a two-crossing clasp.
Plat twist_plat(int n);
PlanarDiagram twist_knot(int n);

/// Turns the listed vertices into double points.
PlanarDiagram with_double_points(const PlanarDiagram& pd, const std::vector<int>& vertices);

/// Random one-component braid closure with `vertices` crossings, `doubles`
/// of which become double points. Deterministic in seed.
PlanarDiagram random_planar_knot(int vertices, int doubles, std::uint64_t seed);

}  // namespace vkit
