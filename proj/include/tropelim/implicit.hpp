// Tropical implicitization of a parametrization given by Newton polytopes.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropelim/eliminate.hpp"
#include "tropelim/exact.hpp"
#include "tropelim/fan.hpp"
#include "tropelim/polytope.hpp"
#include "tropelim/tropical.hpp"

namespace tropelim {

struct ParametrizationInput {
  std::size_t source_rank = 0;  // r
  std::size_t target_rank = 0;  // s
  std::vector<LatticePolytope> polytopes;
  Integer degree = 1;
};

/// One term of the implicitization sum: a normal-fan cone C, a subset J and
/// the resulting cone Psi(C) + R_{>=0}^J with its (undivided) weight.
struct ImplicitizationPair {
  Cone source;
  std::vector<std::size_t> subset;
  Cone target;
  Integer index;
  Integer mixed_volume;
  Integer weight() const { return index * mixed_volume; }
};

namespace detail {

inline void check_input(const ParametrizationInput& in) {
  if (in.target_rank == 0 || in.polytopes.size() != in.target_rank)
    fail(ErrorKind::DimensionMismatch, "need exactly one polytope per target coordinate");
  for (const auto& p : in.polytopes)
    if (p.ambient_rank() != in.source_rank)
      fail(ErrorKind::DimensionMismatch, "polytope ambient rank differs from the source rank");
  if (in.degree < 1) fail(ErrorKind::InvariantViolation, "degree must be positive");
}

// Rows are vertices of face_C(P_i); Psi restricted to C is x -> M x.
inline IntMatrix psi_matrix(const Cone& c, const ParametrizationInput& in) {
  IntVector w = c.relint_point();
  IntMatrix m(in.target_rank, in.source_rank);
  for (std::size_t i = 0; i < in.target_rank; ++i) {
    auto fv = face_vertices(in.polytopes[i], to_rational(w));
    for (std::size_t j = 0; j < in.source_rank; ++j) m(i, j) = fv.front()[j];
  }
  return m;
}

}  // namespace detail

/// Psi(w) = (min <w, P_1>, ..., min <w, P_s>).
inline RatVector psi(const RatVector& w, const ParametrizationInput& in) {
  detail::check_input(in);
  if (w.size() != in.source_rank) fail(ErrorKind::DimensionMismatch, "point length differs from the source rank");
  RatVector out;
  for (const auto& p : in.polytopes) out.push_back(support_value(p, w));
  return out;
}

inline RatVector psi(const IntVector& w, const ParametrizationInput& in) { return psi(to_rational(w), in); }

/// [sat(L) : L] for L = Psi_C(N_C) + Z^J when L has rank r, else 0.
inline Integer index_CJ(const Cone& c, const std::vector<std::size_t>& subset, const ParametrizationInput& in) {
  detail::check_input(in);
  IntMatrix m = detail::psi_matrix(c, in);
  for (const auto& g : c.generators()) {
    RatVector direct = psi(g, in);
    IntVector linear = m.apply(g);
    for (std::size_t i = 0; i < linear.size(); ++i)
      if (direct[i] != Rational(linear[i]))
        fail(ErrorKind::NotNormalFanCone, "the support function is not linear on the cone");
  }
  std::vector<IntVector> gens;
  Sublattice span = c.span_lattice();
  for (const auto& b : span.basis()) gens.push_back(m.apply(b));
  for (std::size_t j : subset) {
    if (j >= in.target_rank) fail(ErrorKind::DimensionMismatch, "subset index out of range");
    gens.push_back(unit_vector(in.target_rank, j));
  }
  Sublattice l = Sublattice::generated_by(gens, in.target_rank);
  if (l.rank() < in.source_rank) return 0;
  return lattice_index(l, saturate(l));
}

/// All pairs (C, J) with |J| = r - dim C and a nonzero contribution.
inline std::vector<ImplicitizationPair> implicitization_pairs(const ParametrizationInput& in) {
  detail::check_input(in);
  const std::size_t r = in.source_rank, s = in.target_rank;
  std::vector<ImplicitizationPair> out;
  LatticePolytope sum = minkowski_sum(in.polytopes);
  for (auto& nc : normal_cones(sum)) {
    const Cone& c = nc.cone;
    const std::size_t need = r - c.dim();
    if (need > s) continue;
    IntVector w = c.relint_point();
    std::vector<LatticePolytope> faces;
    for (const auto& p : in.polytopes) faces.push_back(face(p, w));
    IntMatrix m = detail::psi_matrix(c, in);
    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t j = 0; j < s; ++j)
        if (mask & (std::size_t{1} << j)) subset.push_back(j);
      if (subset.size() != need) continue;
      std::vector<LatticePolytope> chosen;
      for (std::size_t j : subset) chosen.push_back(faces[j]);
      // Early pruning: every subfamily must have enough dimension.
      bool deficient = false;
      for (std::size_t sub = 1; sub < (std::size_t{1} << chosen.size()) && !deficient; ++sub) {
        std::vector<const LatticePolytope*> part;
        for (std::size_t t = 0; t < chosen.size(); ++t)
          if (sub & (std::size_t{1} << t)) part.push_back(&chosen[t]);
        if (sum_dim(part) < part.size()) deficient = true;
      }
      if (deficient) continue;
      Integer mv = mixed_volume(chosen, c.equations());
      if (mv == 0) continue;
      Integer idx = index_CJ(c, subset, in);
      if (idx == 0) continue;
      std::vector<IntVector> rays, lin;
      for (const auto& ray : c.rays()) rays.push_back(m.apply(ray));
      for (const auto& l : c.lineality().basis()) lin.push_back(m.apply(l));
      for (std::size_t j : subset) rays.push_back(unit_vector(s, j));
      Cone target = Cone::from_generators(rays, lin, s);
      if (target.dim() != r) continue;
      out.push_back({c, subset, std::move(target), idx, mv});
    }
  }
  return out;
}

/// Tropical variety of the image of a generic parametrization with the given
/// Newton polytopes, assembled from the pair cones on a common refinement.
inline TropicalCycle tropical_implicitization(const ParametrizationInput& in, std::uint64_t seed = 0) {
  auto pairs = implicitization_pairs(in);
  const std::size_t r = in.source_rank, s = in.target_rank;
  if (pairs.empty()) fail(ErrorKind::DegenerateParametrization, "the image has dimension below the source rank");
  std::vector<Cone> cones;
  for (const auto& p : pairs) cones.push_back(p.target);
  std::vector<WeightedCone> cells;
  for (auto& cell : refine_to_fan(cones)) {
    std::optional<Integer> total;
    for (std::uint64_t attempt = 0; attempt < 32 && !total; ++attempt) {
      IntVector w = cell.relint_point(seed + attempt);
      Integer sum = 0;
      bool generic = true;
      for (const auto& p : pairs) {
        if (!p.target.contains(w)) continue;
        if (!p.target.contains_in_relint(w)) {
          generic = false;
          break;
        }
        sum += p.weight();
      }
      if (generic) total = sum;
    }
    if (!total) fail(ErrorKind::GenericityFailure, "no generic point found in a cell after 32 attempts");
    if (*total == 0) continue;
    if (*total % in.degree != 0)
      fail(ErrorKind::NonIntegralMultiplicity,
           "multiplicity " + to_string(*total) + " is not divisible by the degree " + to_string(in.degree));
    cells.push_back({std::move(cell), *total / in.degree});
  }
  return merge_equal_neighbors(TropicalCycle(s, r, std::move(cells)));
}

/// Graph construction: tropicalize the graph as a complete intersection
/// with Newton polytopes conv(P_i x 0, e_i) and project to the target.
inline TropicalCycle graph_implicitization(const ParametrizationInput& in, std::uint64_t seed = 0) {
  detail::check_input(in);
  const std::size_t r = in.source_rank, s = in.target_rank, n = r + s;
  CompleteIntersectionInput ci;
  ci.ambient_rank = n;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<IntVector> pts;
    for (const auto& v : in.polytopes[i].vertices()) {
      IntVector x = v;
      x.resize(n, Integer(0));
      pts.push_back(std::move(x));
    }
    pts.push_back(unit_vector(n, r + i));
    ci.polytopes.push_back(LatticePolytope::hull(pts));
  }
  TropicalCycle graph = tropical_ci(ci);
  IntMatrix proj(s, n);
  for (std::size_t i = 0; i < s; ++i) proj(i, r + i) = 1;
  TropicalCycle out = pushforward(graph, MonomialMap(proj, in.degree), {seed, true});
  if (out.empty()) fail(ErrorKind::DegenerateParametrization, "the image has dimension below the source rank");
  return out;
}

}  // namespace tropelim
