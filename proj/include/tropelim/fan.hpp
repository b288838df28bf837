// Rational polyhedral cones, fans, normal fans and tropical cycles.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tropelim/detail/double_description.hpp"
#include "tropelim/exact.hpp"
#include "tropelim/polytope.hpp"

namespace tropelim {

// ---------------------------------------------------------------------------
// Cone
// ---------------------------------------------------------------------------

/// Stores both representations in canonical form: rays reduced modulo the
/// lineality space, facet normals reduced modulo the equations, both sorted.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(const std::vector<IntVector>& rays, const std::vector<IntVector>& lineality,
                              std::size_t n) {
    check_lengths(rays, n);
    check_lengths(lineality, n);
    auto dual = detail::solve_cone(rays, lineality, n);
    auto primal = detail::solve_cone(dual.rays, dual.lineality, n);
    return assemble(n, primal, dual);
  }

  /// { x : a . x >= 0 for a in ineqs, e . x = 0 for e in eqs }.
  static Cone from_inequalities(const std::vector<IntVector>& ineqs, const std::vector<IntVector>& eqs,
                                std::size_t n) {
    check_lengths(ineqs, n);
    check_lengths(eqs, n);
    auto primal = detail::solve_cone(ineqs, eqs, n);
    auto dual = detail::solve_cone(primal.rays, primal.lineality, n);
    return assemble(n, primal, dual);
  }

  static Cone origin(std::size_t n) { return from_generators({}, {}, n); }

  static Cone whole_space(std::size_t n) {
    std::vector<IntVector> id;
    for (std::size_t i = 0; i < n; ++i) id.push_back(unit_vector(n, i));
    return from_generators({}, id, n);
  }

  static Cone ray(const IntVector& r) { return from_generators({r}, {}, r.size()); }

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const Sublattice& lineality() const { return lineality_; }
  const std::vector<IntVector>& facet_normals() const { return facets_; }
  const Sublattice& equations() const { return equations_; }
  bool is_pointed() const { return lineality_.rank() == 0; }

  /// Rays followed by +/- each lineality basis vector.
  std::vector<IntVector> generators() const {
    std::vector<IntVector> g = rays_;
    for (const auto& l : lineality_.basis()) {
      g.push_back(l);
      g.push_back(negate(l));
    }
    return g;
  }

  /// N intersected with the linear span of the cone.
  Sublattice span_lattice() const { return orthogonal_lattice(equations_.basis(), ambient_); }

  template <class Vec>
  bool contains(const Vec& x) const {
    for (const auto& e : equations_.basis())
      if (dot(e, x) != 0) return false;
    for (const auto& f : facets_)
      if (dot(f, x) < 0) return false;
    return true;
  }

  template <class Vec>
  bool contains_in_relint(const Vec& x) const {
    for (const auto& e : equations_.basis())
      if (dot(e, x) != 0) return false;
    for (const auto& f : facets_)
      if (dot(f, x) <= 0) return false;
    return true;
  }

  bool contains(const Cone& other) const {
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  /// Sum of the rays.
  IntVector relint_point() const {
    IntVector p = zero_vector(ambient_);
    for (const auto& r : rays_) p = add(p, r);
    return p;
  }

  /// A relative-interior point with pseudo-random positive weights on the
  /// rays and arbitrary lineality component, deterministic in the seed.
  IntVector relint_point(std::uint64_t seed) const {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
    std::uniform_int_distribution<int> weight(1000, 1999), shift(-997, 997);
    IntVector p = zero_vector(ambient_);
    for (const auto& r : rays_) p = add(p, scale(r, Integer(weight(rng))));
    for (const auto& l : lineality_.basis()) p = add(p, scale(l, Integer(shift(rng))));
    return p;
  }

  Cone intersect(const Cone& other) const {
    if (other.ambient_ != ambient_) fail(ErrorKind::DimensionMismatch, "intersecting cones of different ambient rank");
    std::vector<IntVector> ineqs = facets_;
    ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
    std::vector<IntVector> eqs = equations_.basis();
    eqs.insert(eqs.end(), other.equations_.basis().begin(), other.equations_.basis().end());
    return from_inequalities(ineqs, eqs, ambient_);
  }

  /// Intersection with the half-space h . x >= 0.
  Cone with_halfspace(const IntVector& h) const {
    std::vector<IntVector> ineqs = facets_;
    ineqs.push_back(h);
    return from_inequalities(ineqs, equations_.basis(), ambient_);
  }

  /// Faces of the cone, from the cone itself down to its lineality space.
  std::vector<Cone> faces() const {
    const std::size_t nr = rays_.size();
    std::vector<boost::dynamic_bitset<>> tight;
    for (const auto& f : facets_) {
      boost::dynamic_bitset<> t(nr);
      for (std::size_t i = 0; i < nr; ++i)
        if (dot(f, rays_[i]) == 0) t.set(i);
      tight.push_back(t);
    }
    boost::dynamic_bitset<> all(nr);
    all.set();
    std::vector<boost::dynamic_bitset<>> queue{all};
    std::map<boost::dynamic_bitset<>, bool> seen{{all, true}};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& t : tight) {
        auto next = queue[head] & t;
        if (seen.emplace(next, true).second) queue.push_back(next);
      }
    std::vector<Cone> out;
    for (const auto& s : queue) {
      std::vector<IntVector> rs;
      for (std::size_t i = 0; i < nr; ++i)
        if (s.test(i)) rs.push_back(rays_[i]);
      out.push_back(from_generators(rs, lineality_.basis(), ambient_));
    }
    return out;
  }

  std::vector<Cone> faces_of_dim(std::size_t d) const {
    std::vector<Cone> out;
    for (auto& f : faces())
      if (f.dim() == d) out.push_back(std::move(f));
    return out;
  }

  /// True iff this cone is a face of `outer` (assumes containment is not known).
  bool is_face_of(const Cone& outer) const {
    if (!outer.contains(*this)) return false;
    auto gens = generators();
    std::vector<const IntVector*> tight;
    for (const auto& f : outer.facets_) {
      bool zero = true;
      for (const auto& g : gens)
        if (dot(f, g) != 0) {
          zero = false;
          break;
        }
      if (zero) tight.push_back(&f);
    }
    for (const auto& r : outer.rays_) {
      bool on = true;
      for (const auto* f : tight)
        if (dot(*f, r) != 0) {
          on = false;
          break;
        }
      if (on && !contains(r)) return false;
    }
    for (const auto& l : outer.lineality_.basis())
      if (!contains(l)) return false;
    return true;
  }

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_ == b.ambient_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
  }
  friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }

  friend bool operator<(const Cone& a, const Cone& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    if (int c = compare(a.lineality_, b.lineality_); c != 0) return c < 0;
    return std::lexicographical_compare(a.rays_.begin(), a.rays_.end(), b.rays_.begin(), b.rays_.end(),
                                        [](const IntVector& x, const IntVector& y) { return compare(x, y) < 0; });
  }

 private:
  static void check_lengths(const std::vector<IntVector>& vs, std::size_t n) {
    for (const auto& v : vs)
      if (v.size() != n) fail(ErrorKind::DimensionMismatch, "vector length differs from ambient rank");
  }

  static std::vector<IntVector> canonical(const std::vector<IntVector>& vs, const SubspaceReducer& red) {
    std::vector<IntVector> out;
    for (const auto& v : vs) {
      IntVector r = red.reduce(v);
      if (!is_zero(r)) out.push_back(primitive(r));
    }
    std::sort(out.begin(), out.end(), [](const IntVector& x, const IntVector& y) { return compare(x, y) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  static Cone assemble(std::size_t n, const detail::ConeDescription& primal, const detail::ConeDescription& dual) {
    Cone c;
    c.ambient_ = n;
    c.lineality_ = saturate(Sublattice::generated_by(primal.lineality, n));
    c.equations_ = saturate(Sublattice::generated_by(dual.lineality, n));
    c.rays_ = canonical(primal.rays, SubspaceReducer(c.lineality_.basis(), n));
    c.facets_ = canonical(dual.rays, SubspaceReducer(c.equations_.basis(), n));
    c.dim_ = n - c.equations_.rank();
    return c;
  }

  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  Sublattice lineality_;
  std::vector<IntVector> facets_;
  Sublattice equations_;
};

inline Sublattice span_lattice(const Cone& c) { return c.span_lattice(); }
inline IntVector relint_point(const Cone& c) { return c.relint_point(); }

/// Image of a cone under an integer linear map.
inline Cone image(const IntMatrix& a, const Cone& c) {
  if (a.cols() != c.ambient_rank()) fail(ErrorKind::DimensionMismatch, "matrix columns differ from cone ambient rank");
  std::vector<IntVector> rays, lin;
  for (const auto& r : c.rays()) rays.push_back(a.apply(r));
  for (const auto& l : c.lineality().basis()) lin.push_back(a.apply(l));
  return Cone::from_generators(rays, lin, a.rows());
}

inline void sort_cones(std::vector<Cone>& cones) {
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
}

// ---------------------------------------------------------------------------
// Fan
// ---------------------------------------------------------------------------

/// A fan given by its maximal cones.
struct Fan {
  std::size_t ambient_rank = 0;
  std::vector<Cone> cones;

  /// Pairwise intersections are faces of both cones.
  bool is_fan() const {
    for (std::size_t i = 0; i < cones.size(); ++i)
      for (std::size_t j = i + 1; j < cones.size(); ++j) {
        Cone c = cones[i].intersect(cones[j]);
        if (!c.is_face_of(cones[i]) || !c.is_face_of(cones[j])) return false;
      }
    return true;
  }

  /// Index of a cone containing x, if any.
  template <class Vec>
  std::optional<std::size_t> locate(const Vec& x) const {
    for (std::size_t i = 0; i < cones.size(); ++i)
      if (cones[i].contains(x)) return i;
    return std::nullopt;
  }
};

/// Normal cone of a face together with that face.
struct NormalCone {
  VertexSet face;
  std::size_t face_dim = 0;
  Cone cone;
};

/// Normal cones { w : face_w(P) contains F } of the faces F of P with the given
/// dimension (all faces when face_dim is empty).
inline std::vector<NormalCone> normal_cones(const LatticePolytope& p, std::optional<std::size_t> face_dim = {}) {
  const std::size_t n = p.ambient_rank();
  FaceLattice fl = face_lattice(p);
  std::vector<VertexSet> facet_sets;
  for (const auto& f : p.facets()) facet_sets.push_back(p.facet_vertices(f));
  std::vector<IntVector> eqs;
  for (const auto& e : p.equations()) eqs.push_back(e.normal);
  std::vector<NormalCone> out;
  for (std::size_t i = 0; i < fl.faces.size(); ++i) {
    if (face_dim && fl.dims[i] != *face_dim) continue;
    std::vector<IntVector> rays;
    for (std::size_t j = 0; j < facet_sets.size(); ++j)
      if (fl.faces[i].is_subset_of(facet_sets[j])) rays.push_back(p.facets()[j].normal);
    out.push_back({fl.faces[i], fl.dims[i], Cone::from_generators(rays, eqs, n)});
  }
  return out;
}

/// Complete fan of normal cones of the vertices of P (inner normals).
inline Fan normal_fan(const LatticePolytope& p) {
  Fan f;
  f.ambient_rank = p.ambient_rank();
  for (auto& nc : normal_cones(p, std::size_t{0})) f.cones.push_back(std::move(nc.cone));
  sort_cones(f.cones);
  return f;
}

/// Fan of all intersections, one cone from each input fan; maximal cones only.
inline Fan common_refinement(const std::vector<Fan>& fans) {
  if (fans.empty()) fail(ErrorKind::EmptyInput, "common refinement of no fans");
  Fan acc = fans.front();
  for (std::size_t k = 1; k < fans.size(); ++k) {
    if (fans[k].ambient_rank != acc.ambient_rank)
      fail(ErrorKind::DimensionMismatch, "fans live in different ambient ranks");
    std::vector<Cone> next;
    for (const auto& a : acc.cones)
      for (const auto& b : fans[k].cones) next.push_back(a.intersect(b));
    sort_cones(next);
    std::vector<Cone> maximal;
    for (std::size_t i = 0; i < next.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < next.size() && !dominated; ++j)
        if (i != j && next[j].dim() > next[i].dim() && next[j].contains(next[i])) dominated = true;
      if (!dominated) maximal.push_back(next[i]);
    }
    acc.cones = std::move(maximal);
  }
  return acc;
}

namespace detail {

inline bool cuts(const IntVector& h, const Cone& c) {
  bool pos = false, neg = false;
  for (const auto& g : c.generators()) {
    int s = sign(dot(h, g));
    pos |= s > 0;
    neg |= s < 0;
    if (pos && neg) return true;
  }
  return false;
}

inline std::vector<IntVector> hyperplanes_of(const Cone& c) {
  std::vector<IntVector> hs = c.facet_normals();
  for (const auto& e : c.equations().basis()) hs.push_back(e);
  return hs;
}

inline std::optional<IntVector> find_cut(const Cone& cutter, const Cone& target) {
  for (const auto& h : hyperplanes_of(cutter))
    if (cuts(h, target)) return h;
  return std::nullopt;
}

// Looks for y with y > 0 on the rays of a and y < 0 on the rays of b by a
// bounded perceptron run; success proves the cones meet only at the origin.
inline bool strictly_separated(const Cone& a, const Cone& b) {
  std::vector<IntVector> vs = a.rays();
  for (const auto& g : b.rays()) vs.push_back(negate(g));
  if (vs.empty()) return true;
  IntVector y = zero_vector(a.ambient_rank());
  for (const auto& v : vs) y = add(y, v);
  for (int iter = 0; iter < 64; ++iter) {
    const IntVector* bad = nullptr;
    for (const auto& v : vs)
      if (dot(y, v) <= 0) {
        bad = &v;
        break;
      }
    if (!bad) return true;
    y = add(y, *bad);
  }
  return false;
}

// Split a cone by a hyperplane; keeps only pieces of full dimension.
inline std::vector<Cone> split(const Cone& c, const IntVector& h) {
  std::vector<Cone> out;
  for (const auto& hh : {h, negate(h)}) {
    Cone piece = c.with_halfspace(hh);
    if (piece.dim() == c.dim()) out.push_back(std::move(piece));
  }
  return out;
}

}  // namespace detail

/// Subdivides a family of cones of equal dimension into cells of that
/// dimension whose pairwise intersections are common faces; the union of
/// the cells is the union of the input.
inline std::vector<Cone> refine_to_fan(std::vector<Cone> input) {
  if (input.empty()) return {};
  const std::size_t k = input.front().dim();
  for (const auto& c : input)
    if (c.dim() != k) fail(ErrorKind::NotPure, "cones to refine have different dimensions");
  sort_cones(input);
  std::vector<Cone> done;
  std::vector<Cone> work(input.rbegin(), input.rend());
  std::size_t steps = 0;
  while (!work.empty()) {
    if (++steps > 200000) fail(ErrorKind::InvariantViolation, "fan refinement did not terminate");
    Cone c = std::move(work.back());
    work.pop_back();
    bool placed = true;
    for (std::size_t i = 0; i < done.size(); ++i) {
      const Cone& r = done[i];
      if (r == c) {
        placed = false;
        break;
      }
      if (c.is_pointed() && r.is_pointed() && detail::strictly_separated(c, r)) continue;
      Cone meet = c.intersect(r);
      if (meet.is_face_of(c) && meet.is_face_of(r)) continue;
      placed = false;
      if (auto h = detail::find_cut(r, c)) {
        for (auto& piece : detail::split(c, *h)) work.push_back(std::move(piece));
        break;
      }
      if (auto h = detail::find_cut(c, r)) {
        Cone old = r;
        done.erase(done.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto& piece : detail::split(old, *h)) work.push_back(std::move(piece));
        work.push_back(std::move(c));
        break;
      }
      std::optional<IntVector> h;
      bool cut_c = false;
      for (const auto& hh : detail::hyperplanes_of(meet)) {
        if (detail::cuts(hh, c)) {
          h = hh;
          cut_c = true;
          break;
        }
        if (detail::cuts(hh, r)) {
          h = hh;
          break;
        }
      }
      if (!h) fail(ErrorKind::InvariantViolation, "could not separate overlapping cones");
      if (cut_c) {
        for (auto& piece : detail::split(c, *h)) work.push_back(std::move(piece));
      } else {
        Cone old = r;
        done.erase(done.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto& piece : detail::split(old, *h)) work.push_back(std::move(piece));
        work.push_back(std::move(c));
      }
      break;
    }
    if (placed) done.push_back(std::move(c));
  }
  sort_cones(done);
  return done;
}

// ---------------------------------------------------------------------------
// TropicalCycle
// ---------------------------------------------------------------------------

struct WeightedCone {
  Cone cone;
  Integer mult;

  bool operator==(const WeightedCone& o) const { return mult == o.mult && cone == o.cone; }
};

/// Pure k-dimensional weighted fan in Q^n with positive multiplicities.
class TropicalCycle {
 public:
  TropicalCycle() = default;
  TropicalCycle(std::size_t ambient, std::size_t k) : ambient_(ambient), k_(k) {}

  TropicalCycle(std::size_t ambient, std::size_t k, std::vector<WeightedCone> cells)
      : ambient_(ambient), k_(k), cells_(std::move(cells)) {
    for (const auto& c : cells_) {
      if (c.cone.ambient_rank() != ambient_) fail(ErrorKind::DimensionMismatch, "cell in the wrong ambient rank");
      if (c.cone.dim() != k_)
        fail(ErrorKind::NotPure, "cell of dimension " + std::to_string(c.cone.dim()) + " in a cycle of dimension " +
                                     std::to_string(k_));
      if (c.mult <= 0) fail(ErrorKind::InvariantViolation, "multiplicities must be positive");
    }
    std::sort(cells_.begin(), cells_.end(), [](const WeightedCone& a, const WeightedCone& b) {
      if (a.cone != b.cone) return a.cone < b.cone;
      return a.mult < b.mult;
    });
  }

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t dim() const { return k_; }
  const std::vector<WeightedCone>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  std::vector<Cone> cones() const {
    std::vector<Cone> out;
    for (const auto& c : cells_) out.push_back(c.cone);
    return out;
  }

 private:
  std::size_t ambient_ = 0;
  std::size_t k_ = 0;
  std::vector<WeightedCone> cells_;
};

/// Sum of multiplicities of cells whose relative interior contains w; empty
/// when w sits on the relative boundary of some cell (not a regular point
/// of this cell structure).
template <class Vec>
std::optional<Integer> multiplicity_at(const TropicalCycle& t, const Vec& w) {
  Integer m = 0;
  for (const auto& c : t.cells()) {
    if (!c.cone.contains(w)) continue;
    if (!c.cone.contains_in_relint(w)) return std::nullopt;
    m += c.mult;
  }
  return m;
}

struct BalanceReport {
  bool balanced = true;
  std::optional<Cone> face;     // violating codimension-one face
  std::optional<IntVector> residual;  // weighted sum of normal vectors at that face
};

namespace detail {

// Lattice normal vector n_{sigma,tau}: an element of N_sigma mapping to the
// generator of N_sigma / N_tau that points into sigma.
inline IntVector lattice_normal(const Cone& sigma, const Cone& tau) {
  const std::size_t n = sigma.ambient_rank();
  Sublattice ns = sigma.span_lattice();
  Sublattice nt = tau.span_lattice();
  const auto& basis = ns.basis();
  const std::size_t k = basis.size();
  std::vector<IntVector> tau_coords;
  for (const auto& b : nt.basis()) tau_coords.push_back(*ns.coordinates(b));
  std::vector<IntVector> psi_basis = kernel_basis(tau_coords, k);
  if (psi_basis.size() != 1) fail(ErrorKind::InvariantViolation, "face is not of codimension one");
  IntVector psi = psi_basis.front();
  IntVector inside = zero_vector(n);
  for (const auto& r : sigma.rays())
    if (!tau.contains(r)) {
      inside = r;
      break;
    }
  auto inside_coords = *ns.coordinates(inside);
  if (dot(psi, inside_coords) < 0) psi = negate(psi);
  // Solve psi . c = 1 by iterated extended gcd.
  IntVector c = zero_vector(k);
  Integer g = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (psi[i] == 0) continue;
    ExtendedGcd e = extended_gcd(g, psi[i]);
    for (std::size_t j = 0; j < i; ++j) c[j] *= e.x;
    c[i] = e.y;
    g = e.g;
  }
  IntVector v = zero_vector(n);
  for (std::size_t i = 0; i < k; ++i)
    if (c[i] != 0) v = add(v, scale(basis[i], c[i]));
  return v;
}

}  // namespace detail

/// Checks the balancing condition at every codimension-one face.
inline BalanceReport balance_report(const TropicalCycle& t) {
  BalanceReport rep;
  if (t.dim() == 0 || t.empty()) return rep;
  std::map<Cone, std::vector<std::size_t>> around;
  for (std::size_t i = 0; i < t.cells().size(); ++i)
    for (auto& f : t.cells()[i].cone.faces_of_dim(t.dim() - 1)) around[f].push_back(i);
  for (const auto& [tau, idx] : around) {
    IntVector sum = zero_vector(t.ambient_rank());
    for (std::size_t i : idx) sum = add(sum, scale(detail::lattice_normal(t.cells()[i].cone, tau), t.cells()[i].mult));
    if (!tau.span_lattice().span_contains(sum)) {
      rep.balanced = false;
      rep.face = tau;
      rep.residual = sum;
      return rep;
    }
  }
  return rep;
}

inline bool is_balanced(const TropicalCycle& t) { return balance_report(t).balanced; }

/// Merges adjacent cells of equal multiplicity whose union is a convex cone
/// compatible with the remaining cells. Opposite halves of a proper linear
/// subspace are left apart, so a line stays two rays.
inline TropicalCycle merge_equal_neighbors(const TropicalCycle& t) {
  std::vector<WeightedCone> cells = t.cells();
  // Facet normal of a that weakly separates it from b and vanishes on tau.
  auto separating = [](const Cone& a, const Cone& b, const Cone* tau) -> std::optional<IntVector> {
    for (const auto& f : a.facet_normals()) {
      bool ok = true;
      for (const auto& g : b.generators()) ok &= dot(f, g) <= 0;
      if (tau)
        for (const auto& g : tau->generators()) ok &= dot(f, g) == 0;
      if (ok) return f;
    }
    return std::nullopt;
  };
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const Cone& a = cells[i].cone;
      const Cone& b = cells[j].cone;
      if (cells[i].mult != cells[j].mult || !(a.equations() == b.equations())) continue;
      if (!separating(a, b, nullptr)) continue;
      Cone tau = a.intersect(b);
      if (tau.dim() + 1 != a.dim()) continue;
      std::optional<IntVector> h = separating(a, b, &tau);
      if (!h) continue;
      std::vector<IntVector> gens = a.rays();
      gens.insert(gens.end(), b.rays().begin(), b.rays().end());
      Cone merged = Cone::from_generators(gens, a.lineality().basis(), a.ambient_rank());
      if (merged.rays().empty() && merged.dim() < merged.ambient_rank()) continue;
      if (merged.with_halfspace(*h) != a || merged.with_halfspace(negate(*h)) != b) continue;
      bool compatible = true;
      for (std::size_t l = 0; l < cells.size() && compatible; ++l) {
        if (l == i || l == j) continue;
        const Cone& other = cells[l].cone;
        if (merged.is_pointed() && other.is_pointed() && detail::strictly_separated(merged, other)) continue;
        Cone meet = merged.intersect(other);
        compatible = meet.is_face_of(merged) && meet.is_face_of(other);
      }
      if (!compatible) continue;
      cells[i].cone = std::move(merged);
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(j));
      j = i;  // rescan partners of the grown cell
    }
  }
  return TropicalCycle(t.ambient_rank(), t.dim(), std::move(cells));
}

/// Equality of weighted supports: refine both cell structures jointly and
/// compare multiplicities at a relative-interior point of every cell.
inline bool cycles_equal(const TropicalCycle& a, const TropicalCycle& b) {
  if (a.ambient_rank() != b.ambient_rank()) return false;
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  if (a.dim() != b.dim()) return false;
  std::vector<Cone> all = a.cones();
  for (const auto& c : b.cones()) all.push_back(c);
  for (const auto& cell : refine_to_fan(all)) {
    IntVector w = cell.relint_point();
    auto ma = multiplicity_at(a, w);
    auto mb = multiplicity_at(b, w);
    if (!ma || !mb || *ma != *mb) return false;
  }
  return true;
}

/// Re-expresses a weighted cone family (possibly overlapping) as a cycle on a
/// common refinement; overlapping multiplicities add.
inline TropicalCycle refine_cycle(const TropicalCycle& t) {
  if (t.empty()) return t;
  std::vector<WeightedCone> cells;
  for (auto& cell : refine_to_fan(t.cones())) {
    IntVector w = cell.relint_point();
    Integer m = 0;
    for (const auto& c : t.cells())
      if (c.cone.contains(w)) m += c.mult;
    if (m > 0) cells.push_back({std::move(cell), m});
  }
  return TropicalCycle(t.ambient_rank(), t.dim(), std::move(cells));
}

}  // namespace tropelim
