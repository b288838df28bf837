// Random generators and small independent oracles shared by the test suites.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "tropelim/tropelim.hpp"

namespace testing_support {

using namespace tropelim;

inline IntVector iv(std::initializer_list<long long> v) { return to_int_vector(v); }

inline LatticePolytope random_polytope(std::mt19937_64& rng, std::size_t n, int lo, int hi, std::size_t count) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<IntVector> pts;
  for (std::size_t i = 0; i < count; ++i) {
    IntVector p(n);
    for (auto& x : p) x = d(rng);
    pts.push_back(p);
  }
  return LatticePolytope::hull(pts);
}

inline LatticePolytope random_full_polytope(std::mt19937_64& rng, std::size_t n, int lo, int hi, std::size_t count) {
  for (;;) {
    auto p = random_polytope(rng, n, lo, hi, count);
    if (p.dim() == n) return p;
  }
}

inline TropicalCycle rays_cycle(std::size_t n, const std::vector<std::pair<IntVector, long long>>& rays) {
  std::vector<WeightedCone> cells;
  for (const auto& [r, m] : rays) cells.push_back({Cone::ray(r), Integer(m)});
  return TropicalCycle(n, 1, cells);
}

// Planar convex hull by Andrew's monotone chain, counterclockwise, no
// collinear points.
inline std::vector<std::pair<Integer, Integer>> planar_hull(std::vector<std::pair<Integer, Integer>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const auto& o, const auto& a, const auto& b) -> Integer {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<Integer, Integer>> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

// Twice the Euclidean area of a counterclockwise polygon.
inline Integer twice_area(const std::vector<std::pair<Integer, Integer>>& poly) {
  Integer s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    s += a.first * b.second - a.second * b.first;
  }
  return abs(s);
}

inline std::vector<std::pair<Integer, Integer>> as_pairs(const std::vector<IntVector>& pts) {
  std::vector<std::pair<Integer, Integer>> out;
  for (const auto& p : pts) out.emplace_back(p[0], p[1]);
  return out;
}

// Mixed volume of two polygons from areas: area(P+Q) - area(P) - area(Q).
inline Integer planar_mixed_volume(const LatticePolytope& p, const LatticePolytope& q) {
  std::vector<IntVector> sums;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  Integer twice = twice_area(planar_hull(as_pairs(sums))) - twice_area(planar_hull(as_pairs(p.vertices()))) -
                  twice_area(planar_hull(as_pairs(q.vertices())));
  return twice / 2;
}

// Bivariate polynomials with rational coefficients, keyed by exponents.
using Poly = std::map<std::pair<int, int>, Rational>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto& c = out[{ea.first + eb.first, ea.second + eb.second}];
      c += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Poly poly_add(const Poly& a, const Poly& b, const Rational& scale = 1) {
  Poly out = a;
  for (const auto& [e, c] : b) out[e] += scale * c;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Determinant of a polynomial matrix by Laplace expansion along the first row.
inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly out;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].empty()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    out = poly_add(out, poly_mul(m[0][j], poly_det(minor)), j % 2 == 0 ? 1 : -1);
  }
  return out;
}

// Resultant in t of f(t) - x and g(t) - y via the Sylvester matrix; f and g
// are coefficient lists starting at the constant term.
inline Poly sylvester_resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const std::size_t df = f.size() - 1, dg = g.size() - 1, n = df + dg;
  auto coeffs = [](const std::vector<Rational>& h, std::pair<int, int> var) {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < h.size(); ++i) {
      Poly p;
      if (h[i] != 0) p[{0, 0}] = h[i];
      if (i == 0) p[var] = -1;
      out.push_back(p);
    }
    return out;
  };
  auto fc = coeffs(f, {1, 0});
  auto gc = coeffs(g, {0, 1});
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  // Rows hold descending coefficients, shifted.
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t i = 0; i <= df; ++i) m[r][r + i] = fc[df - i];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t i = 0; i <= dg; ++i) m[dg + r][r + i] = gc[dg - i];
  return poly_det(m);
}

inline LatticePolytope newton_polytope(const Poly& p) {
  std::vector<IntVector> pts;
  for (const auto& [e, c] : p) pts.push_back(iv({e.first, e.second}));
  return LatticePolytope::hull(pts);
}

// Integral over x of the length of the vertical fiber of a polygon: the
// fiber length is piecewise linear in x, so the trapezoid rule between
// consecutive vertex abscissae is exact.
inline Rational minkowski_fiber_length(const LatticePolytope& p) {
  auto hull = planar_hull(as_pairs(p.vertices()));
  std::vector<Rational> xs;
  for (const auto& v : hull) xs.push_back(Rational(v.first));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  auto fiber = [&](const Rational& x) -> Rational {
    Rational lo = 0, hi = 0;
    bool any = false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto& a = hull[i];
      const auto& b = hull[(i + 1) % hull.size()];
      Rational ax(a.first), bx(b.first), ay(a.second), by(b.second);
      if ((x < ax && x < bx) || (x > ax && x > bx)) continue;
      std::vector<Rational> ys;
      if (ax == bx) ys = {ay, by};
      else ys = {ay + (by - ay) * (x - ax) / (bx - ax)};
      for (const auto& y : ys) {
        if (!any || y < lo) lo = y;
        if (!any || y > hi) hi = y;
        any = true;
      }
    }
    return hi - lo;
  };
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    total += (xs[i + 1] - xs[i]) * (fiber(xs[i]) + fiber(xs[i + 1])) / 2;
  return total;
}

// Random unimodular matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int step = 0; step < 6; ++step) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    u.add_row_multiple(i, j, c(rng));
  }
  return u;
}

}  // namespace testing_support
