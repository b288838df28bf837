// Push-forward of tropical cycles along monomial maps.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropelim/exact.hpp"
#include "tropelim/fan.hpp"

namespace tropelim {

struct MonomialMap {
  IntMatrix matrix;  // d x n
  Integer degree = 1;

  MonomialMap() = default;
  MonomialMap(IntMatrix a, Integer delta = 1) : matrix(std::move(a)), degree(std::move(delta)) {
    if (degree < 1) fail(ErrorKind::InvariantViolation, "the degree of a monomial map must be positive");
  }
};

struct PushforwardOptions {
  std::uint64_t seed = 0;
  /// Skip cells whose image loses dimension instead of failing with RankDrop.
  bool drop_collapsed = false;
};

/// [N_Pi : A(N_Gamma)] for a cone Pi of the same dimension inside A(Gamma).
inline Integer index_cone_pair(const Cone& gamma, const Cone& pi, const IntMatrix& a) {
  Sublattice img = image(a, gamma.span_lattice());
  if (img.rank() < gamma.dim()) fail(ErrorKind::RankDrop, "the map collapses the cone");
  Cone ag = image(a, gamma);
  if (ag.dim() != pi.dim() || !ag.contains(pi)) fail(ErrorKind::NotContained, "target cone is not inside the image");
  return lattice_index(img, pi.span_lattice());
}

namespace detail {

// Unique v in span(basis) with A v = w, if any.
inline std::optional<RatVector> preimage_in_span(const IntMatrix& a, const std::vector<IntVector>& basis,
                                                 const IntVector& w) {
  const std::size_t k = basis.size(), d = a.rows();
  std::vector<IntVector> cols;
  for (const auto& b : basis) cols.push_back(a.apply(b));
  RatMatrix m(d, RatVector(k));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = cols[j][i];
  auto c = solve_linear(m, to_rational(w), k);
  if (!c) return std::nullopt;
  RatVector v(a.cols(), Rational(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += (*c)[j] * Rational(basis[j][i]);
  return v;
}

}  // namespace detail

/// Push-forward: cells of the refined image fan, each weighted by
/// (1/delta) * sum of m_Gamma * index(Gamma, Pi) over cells Gamma mapping onto it.
inline TropicalCycle pushforward(const TropicalCycle& t, const MonomialMap& map, const PushforwardOptions& opts = {}) {
  const IntMatrix& a = map.matrix;
  if (a.cols() != t.ambient_rank())
    fail(ErrorKind::DimensionMismatch, "matrix has " + std::to_string(a.cols()) + " columns but the cycle lives in rank " +
                                           std::to_string(t.ambient_rank()));
  const std::size_t d = a.rows(), k = t.dim();

  struct Source {
    const WeightedCone* cell;
    Cone image;
    Sublattice image_lattice;
    std::vector<IntVector> span_basis;
  };
  std::vector<Source> sources;
  std::vector<Cone> images;
  for (const auto& cell : t.cells()) {
    Sublattice span = cell.cone.span_lattice();
    Sublattice img = image(a, span);
    if (img.rank() < k) {
      if (opts.drop_collapsed) continue;
      fail(ErrorKind::RankDrop, "a cell of dimension " + std::to_string(k) + " collapses under the map");
    }
    Cone ag = image(a, cell.cone);
    images.push_back(ag);
    sources.push_back({&cell, std::move(ag), std::move(img), span.basis()});
  }
  if (sources.empty()) return TropicalCycle(d, k);

  std::vector<WeightedCone> out;
  for (auto& pi : refine_to_fan(images)) {
    Sublattice pi_lattice = pi.span_lattice();
    std::optional<Integer> total;
    for (std::uint64_t attempt = 0; attempt < 32 && !total; ++attempt) {
      IntVector w = pi.relint_point(opts.seed + attempt);
      Integer sum = 0;
      bool generic = true;
      for (const auto& s : sources) {
        if (!s.image.contains(w)) continue;
        auto v = detail::preimage_in_span(a, s.span_basis, w);
        if (!v || !s.cell->cone.contains(*v)) continue;
        if (!s.cell->cone.contains_in_relint(*v)) {
          generic = false;
          break;
        }
        sum += s.cell->mult * lattice_index(s.image_lattice, pi_lattice);
      }
      if (generic) total = sum;
    }
    if (!total) fail(ErrorKind::GenericityFailure, "no generic point found in a target cell after 32 attempts");
    if (*total == 0) continue;
    if (*total % map.degree != 0)
      fail(ErrorKind::NonIntegralMultiplicity, "weighted fiber sum " + to_string(*total) + " is not divisible by " +
                                                   to_string(map.degree));
    out.push_back({std::move(pi), *total / map.degree});
  }
  return merge_equal_neighbors(TropicalCycle(d, k, std::move(out)));
}

}  // namespace tropelim
