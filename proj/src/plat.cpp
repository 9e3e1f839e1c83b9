#include "vkit/plat.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "vkit/error.hpp"

namespace vkit {

namespace {

// Slots of a plat crossing, counter-clockwise.
enum Half { TR = 0, TL = 1, BL = 2, BR = 3 };

struct Visit2 {
  std::size_t row;
  Half in;
  Half out;
};

}  // namespace

std::optional<PlanarDiagram> trace_plat(const Plat& plat) {
  const std::size_t rows = plat.letters.size();
  std::vector<int> top(static_cast<std::size_t>(plat.width), -1);
  std::vector<int> bottom(static_cast<std::size_t>(plat.width), -1);
  for (auto [a, b] : plat.top) {
    top[static_cast<std::size_t>(a)] = b;
    top[static_cast<std::size_t>(b)] = a;
  }
  for (auto [a, b] : plat.bottom) {
    bottom[static_cast<std::size_t>(a)] = b;
    bottom[static_cast<std::size_t>(b)] = a;
  }
  int col = 0;
  std::size_t r = 0;
  bool down = true;
  std::vector<Visit2> visits;
  const std::size_t limit = 4 * rows + 4 * static_cast<std::size_t>(plat.width) + 8;
  for (std::size_t step = 0; step < limit; ++step) {
    if (down) {
      if (r == rows) {
        col = bottom[static_cast<std::size_t>(col)];
        down = false;
      } else {
        const auto& l = plat.letters[r];
        if (col == l.column) {
          visits.push_back({r, TL, BR});
          col = l.column + 1;
        } else if (col == l.column + 1) {
          visits.push_back({r, TR, BL});
          col = l.column;
        }
        ++r;
      }
    } else {
      if (r == 0) {
        col = top[static_cast<std::size_t>(col)];
        down = true;
      } else {
        const auto& l = plat.letters[r - 1];
        if (col == l.column) {
          visits.push_back({r - 1, BL, TR});
          col = l.column + 1;
        } else if (col == l.column + 1) {
          visits.push_back({r - 1, BR, TL});
          col = l.column;
        }
        --r;
      }
    }
    if (col == 0 && r == 0 && down) break;
  }
  if (visits.size() != 2 * rows) return std::nullopt;
  std::vector<PdVertex> vertices(rows);
  std::vector<int> count(rows, 0);
  for (std::size_t i = 0; i < visits.size(); ++i) {
    auto& v = vertices[visits[i].row];
    v.edges[visits[i].in] = static_cast<int>(i) + 1;
    v.edges[visits[i].out] = static_cast<int>(i) + 2;
    ++count[visits[i].row];
  }
  if (std::any_of(count.begin(), count.end(), [](int c) { return c != 2; })) return std::nullopt;
  for (std::size_t row = 0; row < rows; ++row) vertices[row].over = plat.letters[row].sign > 0 ? TR : TL;
  return PlanarDiagram(std::move(vertices));
}

Plat braid_closure(int strands, const std::vector<int>& generators) {
  Plat p;
  p.width = 2 * strands;
  for (int j = 0; j < strands; ++j) p.top.emplace_back(j, 2 * strands - 1 - j);
  p.bottom = p.top;
  for (int g : generators) p.letters.push_back({std::abs(g) - 1, g > 0 ? 1 : -1});
  return p;
}

Plat twist_plat(int n) {
  if (n < 2) throw Error(ErrorCode::PatternMismatch, "twist knots need at least two crossings");
  Plat p;
  p.width = 4;
  p.top = {{0, 1}, {2, 3}};
  p.bottom = {{0, 3}, {1, 2}};
  for (int i = 0; i < n - 2; ++i) p.letters.push_back({1, 1});
  p.letters.push_back({0, -1});
  p.letters.push_back({0, -1});
  return p;
}

PlanarDiagram twist_knot(int n) { return *trace_plat(twist_plat(n)); }

PlanarDiagram with_double_points(const PlanarDiagram& pd, const std::vector<int>& vertices) {
  auto vs = pd.vertices();
  for (int v : vertices) vs.at(static_cast<std::size_t>(v)).kind = VertexKind::Double;
  return PlanarDiagram(std::move(vs));
}

PlanarDiagram random_planar_knot(int vertices, int doubles, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::uint64_t bound) { return static_cast<int>(rng() % bound); };
  if (vertices == 0) return PlanarDiagram();
  for (;;) {
    const int strands = 2 + below(3);
    std::vector<int> gens;
    for (int i = 0; i < vertices; ++i) gens.push_back((1 + below(static_cast<std::uint64_t>(strands - 1))) * (below(2) ? 1 : -1));
    auto pd = trace_plat(braid_closure(strands, gens));
    if (!pd) continue;
    std::vector<int> order(static_cast<std::size_t>(vertices));
    for (int i = 0; i < vertices; ++i) order[static_cast<std::size_t>(i)] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[static_cast<std::size_t>(below(i))]);
    order.resize(static_cast<std::size_t>(std::min(doubles, vertices)));
    return with_double_points(*pd, order);
  }
}

}  // namespace vkit
