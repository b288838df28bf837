// Newton polytope reconstruction from codimension-one cycles by ray
// shooting, and mixed fiber / fiber polytopes.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tropelim/eliminate.hpp"
#include "tropelim/exact.hpp"
#include "tropelim/fan.hpp"
#include "tropelim/polytope.hpp"
#include "tropelim/tropical.hpp"

namespace tropelim {

namespace detail {

inline void check_hypersurface_cycle(const TropicalCycle& t) {
  if (t.ambient_rank() == 0 || t.dim() + 1 != t.ambient_rank())
    fail(ErrorKind::DimensionMismatch, "expected a cycle of codimension one");
}

// Coordinates of the vertex seen from u, or nothing when some halfline meets
// the cycle outside its regular locus.
inline std::optional<IntVector> shoot(const TropicalCycle& t, const RatVector& u) {
  const std::size_t d = t.ambient_rank();
  IntVector out = zero_vector(d);
  for (std::size_t i = 0; i < d; ++i) {
    Integer coord = 0;
    for (const auto& cell : t.cells()) {
      const IntVector& a = cell.cone.equations().basis().front();
      Rational au = dot(a, u);
      if (a[i] == 0) {
        if (au == 0) return std::nullopt;  // halfline runs inside the hyperplane
        continue;
      }
      Rational step = -au / Rational(a[i]);
      if (step < 0) continue;
      RatVector v = u;
      v[i] += step;
      if (!cell.cone.contains(v)) continue;
      if (step == 0 || !cell.cone.contains_in_relint(v)) return std::nullopt;
      std::vector<IntVector> gens = cell.cone.span_lattice().basis();
      gens.push_back(unit_vector(d, i));
      coord += cell.mult * lattice_index(Sublattice::generated_by(gens, d), Sublattice::full(d));
    }
    out[i] = coord;
  }
  return out;
}

}  // namespace detail

/// Vertex face_u(Q) of the polytope Q whose tropical hypersurface is t.
inline IntVector vertex_by_ray_shooting(const TropicalCycle& t, const RatVector& u, std::uint64_t seed = 0) {
  detail::check_hypersurface_cycle(t);
  if (u.size() != t.ambient_rank()) fail(ErrorKind::DimensionMismatch, "point length differs from ambient rank");
  for (const auto& cell : t.cells())
    if (cell.cone.contains(u)) fail(ErrorKind::OnSupport, "the starting point lies on the cycle");
  if (auto v = detail::shoot(t, u)) return *v;
  // Nudge u inside its chamber; the perturbations shrink geometrically.
  std::mt19937_64 rng(seed ^ 0xA5A5A5A5ULL);
  std::uniform_int_distribution<int> dir(-1000, 1000);
  Rational eps = Rational(1) / 1000000;
  for (int attempt = 1; attempt < 32; ++attempt, eps /= 2) {
    RatVector w = u;
    for (auto& x : w) x += eps * Rational(dir(rng)) / 1000;
    bool on = false;
    for (const auto& cell : t.cells()) on |= cell.cone.contains(w);
    if (on) continue;
    if (auto v = detail::shoot(t, w)) return *v;
  }
  fail(ErrorKind::GenericityFailure, "every halfline perturbation met the cycle non-transversally");
}

inline IntVector vertex_by_ray_shooting(const TropicalCycle& t, const IntVector& u, std::uint64_t seed = 0) {
  return vertex_by_ray_shooting(t, to_rational(u), seed);
}

/// Chambers of the arrangement of hyperplanes spanned by the cells.
inline std::vector<Cone> complement_chambers(const TropicalCycle& t) {
  const std::size_t d = t.ambient_rank();
  std::vector<IntVector> hyperplanes;
  for (const auto& cell : t.cells()) {
    IntVector a = cell.cone.equations().basis().front();
    std::size_t p = 0;
    while (a[p] == 0) ++p;
    if (a[p] < 0) a = negate(a);
    hyperplanes.push_back(a);
  }
  std::sort(hyperplanes.begin(), hyperplanes.end(), [](const IntVector& x, const IntVector& y) { return compare(x, y) < 0; });
  hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());
  std::vector<Cone> regions{Cone::whole_space(d)};
  for (const auto& h : hyperplanes) {
    std::vector<Cone> next;
    for (const auto& r : regions) {
      bool pos = false, neg = false;
      for (const auto& g : r.generators()) {
        int sg = sign(dot(h, g));
        pos |= sg > 0;
        neg |= sg < 0;
      }
      if (pos && neg) {
        next.push_back(r.with_halfspace(h));
        next.push_back(r.with_halfspace(negate(h)));
      } else {
        next.push_back(r);
      }
    }
    regions = std::move(next);
  }
  return regions;
}

/// The lattice polytope (coordinatewise minimum at the origin) whose
/// tropical hypersurface is the balanced codimension-one cycle t.
inline LatticePolytope reconstruct_polytope(const TropicalCycle& t, std::uint64_t seed = 0) {
  detail::check_hypersurface_cycle(t);
  auto rep = balance_report(t);
  if (!rep.balanced) fail(ErrorKind::NotBalanced, "the cycle is not balanced, so it is not a tropical hypersurface");
  const std::size_t d = t.ambient_rank();
  if (t.empty()) return LatticePolytope::point(zero_vector(d));
  std::vector<IntVector> verts;
  for (const auto& chamber : complement_chambers(t)) {
    std::optional<IntVector> v;
    for (std::uint64_t attempt = 0; attempt < 32 && !v; ++attempt)
      v = detail::shoot(t, to_rational(chamber.relint_point(seed + attempt)));
    if (!v) fail(ErrorKind::GenericityFailure, "no transversal halflines found from a chamber after 32 attempts");
    verts.push_back(std::move(*v));
  }
  return LatticePolytope::hull(verts).min_normalized();
}

/// delta times the Newton polytope of the image hypersurface: the mixed fiber
/// polytope of P_1, ..., P_c under the projection given by the map.
inline LatticePolytope mixed_fiber_polytope(const std::vector<LatticePolytope>& polytopes, const MonomialMap& map,
                                            std::uint64_t seed = 0) {
  if (polytopes.empty()) fail(ErrorKind::EmptyInput, "no polytopes given");
  const std::size_t n = polytopes.front().ambient_rank(), c = polytopes.size();
  if (c > n || map.matrix.rows() != n - c + 1 || map.matrix.cols() != n)
    fail(ErrorKind::DimensionMismatch, "the map must go from rank n to rank n - c + 1");
  TropicalCycle x = tropical_ci({n, polytopes});
  TropicalCycle y = pushforward(x, map, {seed, true});
  LatticePolytope q = reconstruct_polytope(y, seed);
  return q.dilate(map.degree).min_normalized();
}

/// (1/c!) times the mixed fiber polytope of c copies of P.
inline RationalPolytope fiber_polytope(const LatticePolytope& p, const MonomialMap& map, std::size_t c,
                                       std::uint64_t seed = 0) {
  if (c == 0) fail(ErrorKind::EmptyInput, "c must be positive");
  std::vector<LatticePolytope> copies(c, p);
  LatticePolytope mixed = mixed_fiber_polytope(copies, map, seed);
  return RationalPolytope::from(mixed).scale(Rational(1) / Rational(factorial(c))).min_normalized();
}

}  // namespace tropelim
