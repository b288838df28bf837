// Tropicalization of generic complete intersections and hypersurfaces.
#pragma once

#include <cstddef>
#include <vector>

#include "tropelim/exact.hpp"
#include "tropelim/fan.hpp"
#include "tropelim/polytope.hpp"

namespace tropelim {

struct CompleteIntersectionInput {
  std::size_t ambient_rank = 0;
  std::vector<LatticePolytope> polytopes;
};

namespace detail {

inline std::vector<IntVector> face_vertices(const LatticePolytope& p, const RatVector& w) {
  Rational best = support_value(p, w);
  std::vector<IntVector> out;
  for (const auto& v : p.vertices())
    if (dot(v, w) == best) out.push_back(v);
  return out;
}

inline void check_input(const CompleteIntersectionInput& in) {
  for (const auto& p : in.polytopes)
    if (p.ambient_rank() != in.ambient_rank)
      fail(ErrorKind::DimensionMismatch, "polytope ambient rank differs from the declared rank");
}

}  // namespace detail

/// dim face_w(P_I) >= |I| for every nonempty I.
inline bool is_in_tropical_ci(const RatVector& w, const CompleteIntersectionInput& in) {
  detail::check_input(in);
  if (w.size() != in.ambient_rank) fail(ErrorKind::DimensionMismatch, "point length differs from ambient rank");
  const std::size_t c = in.polytopes.size();
  std::vector<std::vector<IntVector>> dirs(c);
  for (std::size_t i = 0; i < c; ++i) {
    auto fv = detail::face_vertices(in.polytopes[i], w);
    for (const auto& v : fv) dirs[i].push_back(subtract(v, fv.front()));
  }
  for (std::size_t mask = 1; mask < (std::size_t{1} << c); ++mask) {
    std::vector<IntVector> all;
    std::size_t size = 0;
    for (std::size_t i = 0; i < c; ++i)
      if (mask & (std::size_t{1} << i)) {
        ++size;
        all.insert(all.end(), dirs[i].begin(), dirs[i].end());
      }
    if (rank(all, in.ambient_rank) < size) return false;
  }
  return true;
}

inline bool is_in_tropical_ci(const IntVector& w, const CompleteIntersectionInput& in) {
  return is_in_tropical_ci(to_rational(w), in);
}

/// Multiplicity MV(face_w(P_1), ..., face_w(P_c)) for w in the relative
/// interior of the cone gamma, normalized in Z^n intersected with span(gamma)^perp.
inline Integer ci_multiplicity(const Cone& gamma, const IntVector& w, const CompleteIntersectionInput& in) {
  std::vector<LatticePolytope> faces;
  for (const auto& p : in.polytopes) faces.push_back(face(p, w));
  return mixed_volume(faces, gamma.equations());
}

/// Tropical variety of a generic complete intersection with the given Newton
/// polytopes; cells are normal cones of the Minkowski sum. The empty cycle is
/// returned when the variety is empty.
inline TropicalCycle tropical_ci(const CompleteIntersectionInput& in) {
  detail::check_input(in);
  const std::size_t n = in.ambient_rank;
  const std::size_t c = in.polytopes.size();
  if (c > n) fail(ErrorKind::InvariantViolation, "more polytopes than the ambient rank");
  if (c == 0) return TropicalCycle(n, n, {{Cone::whole_space(n), 1}});
  LatticePolytope sum = minkowski_sum(in.polytopes);
  if (sum.dim() < n)
    fail(ErrorKind::InvariantViolation, "the Minkowski sum has dimension " + std::to_string(sum.dim()) +
                                            " below the ambient rank " + std::to_string(n));
  std::vector<WeightedCone> cells;
  for (auto& nc : normal_cones(sum, c)) {
    IntVector w = nc.cone.relint_point();
    if (!is_in_tropical_ci(w, in)) continue;
    Integer m = ci_multiplicity(nc.cone, w, in);
    if (m <= 0) fail(ErrorKind::InvariantViolation, "mixed volume vanishes at a point of the support");
    cells.push_back({std::move(nc.cone), m});
  }
  return TropicalCycle(n, n - c, std::move(cells));
}

/// Codimension-one skeleton of the normal fan of Q, weighted by the lattice
/// lengths of the dual edges.
inline TropicalCycle tropical_hypersurface(const LatticePolytope& q) {
  const std::size_t n = q.ambient_rank();
  if (q.dim() == 0) fail(ErrorKind::ZeroDimensional, "the Newton polytope is a single point");
  std::vector<WeightedCone> cells;
  for (auto& nc : normal_cones(q, std::size_t{1})) {
    auto ends = vertices_of(q, nc.face);
    Integer len = content(subtract(ends[1], ends[0]));
    cells.push_back({std::move(nc.cone), len});
  }
  return TropicalCycle(n, n - 1, std::move(cells));
}

}  // namespace tropelim
