#pragma once

// c2 from the Alexander polynomial, computed without the library's
// arrow-counting formula. Input diagrams must be realizable.

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "vkit/gauss.hpp"
#include "vkit/planar.hpp"

namespace testing_oracle {

using Q = boost::multiprecision::cpp_rational;

// a0 + a1 e + a2 e^2 modulo e^3.
struct Series {
  Q a0, a1, a2;
};

inline Series operator*(const Series& x, const Series& y) {
  return {x.a0 * y.a0, x.a0 * y.a1 + x.a1 * y.a0, x.a0 * y.a2 + x.a1 * y.a1 + x.a2 * y.a0};
}
inline Series operator-(const Series& x, const Series& y) { return {x.a0 - y.a0, x.a1 - y.a1, x.a2 - y.a2}; }
inline Series& operator+=(Series& x, const Series& y) {
  x.a0 += y.a0;
  x.a1 += y.a1;
  x.a2 += y.a2;
  return x;
}
inline Series inverse(const Series& x) {
  const Q b0 = 1 / x.a0;
  const Q b1 = -x.a1 * b0 * b0;
  const Q b2 = -(x.a1 * b1 + x.a2 * b0) * b0;
  return {b0, b1, b2};
}

// Determinant of the reduced Alexander matrix at t = 1 + e.
inline Series alexander_at_one(const vkit::SingularGaussCode& code) {
  const int n = code.crossings();
  if (n <= 1) return {1, 0, 0};
  const auto ids = code.crossing_ids();
  std::vector<int> row_of(static_cast<std::size_t>(code.fresh_crossing_id()), -1);
  for (int i = 0; i < n; ++i) row_of[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])] = i;

  std::vector<int> over_arc(static_cast<std::size_t>(n)), in_arc(static_cast<std::size_t>(n)), out_arc(static_cast<std::size_t>(n));
  int arc = 0;
  for (const auto& t : code.tokens()) {
    const auto r = static_cast<std::size_t>(row_of[static_cast<std::size_t>(t.id)]);
    if (t.kind == vkit::Visit::Over) {
      over_arc[r] = arc;
    } else {
      in_arc[r] = arc;
      arc = (arc + 1) % n;
      out_arc[r] = arc;
    }
  }

  const Series t{1, 1, 0}, one_minus_t{0, -1, 0};
  std::vector<std::vector<Series>> m(static_cast<std::size_t>(n), std::vector<Series>(static_cast<std::size_t>(n)));
  for (int id : ids) {
    const auto r = static_cast<std::size_t>(row_of[static_cast<std::size_t>(id)]);
    const bool pos = code.crossing_sign(id) > 0;
    m[r][static_cast<std::size_t>(over_arc[r])] += one_minus_t;
    m[r][static_cast<std::size_t>(in_arc[r])] += pos ? t : Series{-1, 0, 0};
    m[r][static_cast<std::size_t>(out_arc[r])] += pos ? Series{-1, 0, 0} : t;
  }

  const std::size_t d = static_cast<std::size_t>(n - 1);
  Series det{1, 0, 0};
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && m[p][c].a0 == 0) ++p;
    if (p == d) return {0, 0, 0};
    if (p != c) {
      std::swap(m[p], m[c]);
      det = det * Series{-1, 0, 0};
    }
    det = det * m[c][c];
    const Series inv = inverse(m[c][c]);
    for (std::size_t r = c + 1; r < d; ++r) {
      const Series f = m[r][c] * inv;
      for (std::size_t j = c; j < d; ++j) m[r][j] = m[r][j] - f * m[c][j];
    }
  }
  return det;
}

// Second Conway coefficient: with D = +-t^s Delta and Delta symmetric,
// s = D'(1)/D(1) and Delta''(1) = D''(1)/D(1) - s(s-1).
inline Q alexander_c2(const vkit::SingularGaussCode& code) {
  const Series d = alexander_at_one(code);
  const Q s = d.a1 / d.a0;
  const Q second = 2 * d.a2 / d.a0;
  return (second - s * (s - 1)) / 2;
}

// Resolves double points geometrically through the planar structure.
inline Q geometric_c2(const vkit::PlanarDiagram& pd) {
  auto verts = pd.vertices();
  for (std::size_t v = 0; v < verts.size(); ++v) {
    if (verts[v].kind != vkit::VertexKind::Double) continue;
    Q total = 0;
    for (int over : {0, 1}) {
      auto copy = verts;
      copy[v].kind = vkit::VertexKind::Crossing;
      copy[v].over = over;
      const vkit::PlanarDiagram resolved(copy);
      total += resolved.sign(static_cast<int>(v)) * geometric_c2(resolved);
    }
    return total;
  }
  return alexander_c2(vkit::pd_to_gauss(pd));
}

}  // namespace testing_oracle
