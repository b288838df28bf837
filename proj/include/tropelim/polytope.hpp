// Lattice and rational polytopes: exact hulls, Minkowski sums, faces,
// normalized and mixed volumes. Faces use the minimization convention.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tropelim/detail/double_description.hpp"
#include "tropelim/exact.hpp"

namespace tropelim {

using VertexSet = boost::dynamic_bitset<>;

/// Inequality normal . x + offset >= 0, tight exactly on one facet.
struct Facet {
  IntVector normal;
  Integer offset;
};

namespace detail {

struct HullData {
  std::vector<std::size_t> vertices;  // indices into the homogenized input
  std::vector<Facet> facets;
  std::vector<Facet> equations;  // affine hull: normal . x + offset = 0
};

// Points are given homogenized as (den * p, den) with den > 0.
inline HullData hull_homogeneous(const std::vector<IntVector>& pts, std::size_t n) {
  HullData out;
  ConeDescription dual = solve_cone(pts, {}, n + 1);
  auto split = [n](const IntVector& y) {
    Facet f;
    f.normal.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
    f.offset = y[n];
    return f;
  };
  for (const auto& e : dual.lineality) out.equations.push_back(split(e));

  std::vector<VertexSet> tight;
  for (const auto& y : dual.rays) {
    VertexSet t(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(y, pts[i]) == 0) t.set(i);
    if (t.none()) continue;  // the empty face of a single point
    tight.push_back(t);
    out.facets.push_back(split(y));
  }
  if (out.facets.empty()) {
    out.vertices.push_back(0);
    return out;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    VertexSet meet(pts.size());
    meet.set();
    bool on_some = false;
    for (const auto& t : tight)
      if (t.test(i)) {
        meet &= t;
        on_some = true;
      }
    if (on_some && meet.count() == 1) out.vertices.push_back(i);
  }
  return out;
}

inline std::size_t affine_rank(const std::vector<IntVector>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(subtract(pts[i], pts[0]));
  return rank(diffs, pts[0].size());
}

inline std::size_t affine_rank(const std::vector<RatVector>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVector d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(clear_denominators(d));
  }
  return rank(diffs, pts[0].size());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// LatticePolytope
// ---------------------------------------------------------------------------

class LatticePolytope {
 public:
  LatticePolytope() = default;

  static LatticePolytope hull(std::vector<IntVector> points) {
    if (points.empty()) fail(ErrorKind::EmptyInput, "hull of an empty point set");
    const std::size_t n = points.front().size();
    for (const auto& p : points)
      if (p.size() != n) fail(ErrorKind::DimensionMismatch, "points of different lengths");
    std::sort(points.begin(), points.end(), [](const IntVector& a, const IntVector& b) { return compare(a, b) < 0; });
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope p;
    p.ambient_ = n;
    std::vector<IntVector> homog;
    for (const auto& x : points) {
      IntVector h = x;
      h.push_back(1);
      homog.push_back(std::move(h));
    }
    detail::HullData data = detail::hull_homogeneous(homog, n);
    for (std::size_t i : data.vertices) p.vertices_.push_back(points[i]);
    p.facets_ = std::move(data.facets);
    p.equations_ = std::move(data.equations);
    p.dim_ = n - p.equations_.size();
    return p;
  }

  static LatticePolytope hull(std::initializer_list<std::initializer_list<long long>> points) {
    std::vector<IntVector> pts;
    for (const auto& p : points) pts.push_back(to_int_vector(p));
    return hull(std::move(pts));
  }

  static LatticePolytope point(const IntVector& p) { return hull(std::vector<IntVector>{p}); }

  /// Convex hull of 0 and k*e_i (k may be negative).
  static LatticePolytope scaled_simplex(std::size_t n, long long k) {
    std::vector<IntVector> pts{zero_vector(n)};
    for (std::size_t i = 0; i < n; ++i) pts.push_back(scale(unit_vector(n, i), Integer(k)));
    return hull(std::move(pts));
  }

  std::size_t ambient_rank() const { return ambient_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Facet>& equations() const { return equations_; }

  /// Vertices lying on a facet.
  VertexSet facet_vertices(const Facet& f) const {
    VertexSet s(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (dot(f.normal, vertices_[i]) + f.offset == 0) s.set(i);
    return s;
  }

  LatticePolytope translate(const IntVector& t) const {
    std::vector<IntVector> pts;
    for (const auto& v : vertices_) pts.push_back(add(v, t));
    return hull(std::move(pts));
  }

  LatticePolytope dilate(const Integer& k) const {
    std::vector<IntVector> pts;
    for (const auto& v : vertices_) pts.push_back(scale(v, k));
    return hull(std::move(pts));
  }

  /// Translate so that the coordinatewise minimum is the origin.
  LatticePolytope min_normalized() const {
    IntVector lo = vertices_.front();
    for (const auto& v : vertices_)
      for (std::size_t i = 0; i < ambient_; ++i) lo[i] = std::min(lo[i], v[i]);
    return translate(negate(lo));
  }

  bool contains(const IntVector& x) const {
    for (const auto& e : equations_)
      if (dot(e.normal, x) + e.offset != 0) return false;
    for (const auto& f : facets_)
      if (dot(f.normal, x) + f.offset < 0) return false;
    return true;
  }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Facet> equations_;
};

// ---------------------------------------------------------------------------
// RationalPolytope
// ---------------------------------------------------------------------------

class RationalPolytope {
 public:
  RationalPolytope() = default;

  static RationalPolytope hull(std::vector<RatVector> points) {
    if (points.empty()) fail(ErrorKind::EmptyInput, "hull of an empty point set");
    const std::size_t n = points.front().size();
    for (const auto& p : points)
      if (p.size() != n) fail(ErrorKind::DimensionMismatch, "points of different lengths");
    auto less = [](const RatVector& a, const RatVector& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    std::sort(points.begin(), points.end(), less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<IntVector> homog;
    for (const auto& x : points) {
      RatVector h = x;
      h.push_back(1);
      homog.push_back(clear_denominators(h));
    }
    detail::HullData data = detail::hull_homogeneous(homog, n);
    RationalPolytope p;
    p.ambient_ = n;
    for (std::size_t i : data.vertices) p.vertices_.push_back(points[i]);
    p.dim_ = n - data.equations.size();
    return p;
  }

  static RationalPolytope from(const LatticePolytope& p) {
    std::vector<RatVector> pts;
    for (const auto& v : p.vertices()) pts.push_back(to_rational(v));
    return hull(std::move(pts));
  }

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t dim() const { return dim_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }

  RationalPolytope scale(const Rational& k) const {
    std::vector<RatVector> pts;
    for (auto v : vertices_) {
      for (auto& x : v) x *= k;
      pts.push_back(std::move(v));
    }
    return hull(std::move(pts));
  }

  RationalPolytope min_normalized() const {
    RatVector lo = vertices_.front();
    for (const auto& v : vertices_)
      for (std::size_t i = 0; i < ambient_; ++i) lo[i] = std::min(lo[i], v[i]);
    std::vector<RatVector> pts;
    for (auto v : vertices_) {
      for (std::size_t i = 0; i < ambient_; ++i) v[i] -= lo[i];
      pts.push_back(std::move(v));
    }
    return hull(std::move(pts));
  }

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
    return a.ambient_ == b.ambient_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
};

inline RationalPolytope hull(const std::vector<RatVector>& points) { return RationalPolytope::hull(points); }
inline LatticePolytope hull(const std::vector<IntVector>& points) { return LatticePolytope::hull(points); }

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

inline LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_rank() != q.ambient_rank())
    fail(ErrorKind::DimensionMismatch, "Minkowski sum of polytopes in different ambient ranks");
  std::vector<IntVector> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(add(a, b));
  return LatticePolytope::hull(std::move(pts));
}

inline LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& ps) {
  if (ps.empty()) fail(ErrorKind::EmptyInput, "Minkowski sum of no polytopes");
  LatticePolytope acc = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) acc = minkowski_sum(acc, ps[i]);
  return acc;
}

inline Rational support_value(const LatticePolytope& p, const RatVector& w) {
  if (w.size() != p.ambient_rank()) fail(ErrorKind::DimensionMismatch, "covector length differs from ambient rank");
  Rational best = dot(p.vertices().front(), w);
  for (const auto& v : p.vertices()) best = std::min(best, dot(v, w));
  return best;
}

inline Integer support_value(const LatticePolytope& p, const IntVector& w) {
  if (w.size() != p.ambient_rank()) fail(ErrorKind::DimensionMismatch, "covector length differs from ambient rank");
  Integer best = dot(p.vertices().front(), w);
  for (const auto& v : p.vertices()) best = std::min(best, dot(v, w));
  return best;
}

/// Face on which w attains its minimum.
inline LatticePolytope face(const LatticePolytope& p, const RatVector& w) {
  Rational best = support_value(p, w);
  std::vector<IntVector> pts;
  for (const auto& v : p.vertices())
    if (dot(v, w) == best) pts.push_back(v);
  return LatticePolytope::hull(std::move(pts));
}

inline LatticePolytope face(const LatticePolytope& p, const IntVector& w) { return face(p, to_rational(w)); }

/// Dimension of face_w(P) without building its hull.
inline std::size_t face_dim(const LatticePolytope& p, const RatVector& w) {
  Rational best = support_value(p, w);
  std::vector<IntVector> pts;
  for (const auto& v : p.vertices())
    if (dot(v, w) == best) pts.push_back(v);
  return detail::affine_rank(pts);
}

/// Dimension of the Minkowski sum of the given polytopes.
inline std::size_t sum_dim(const std::vector<const LatticePolytope*>& ps) {
  if (ps.empty()) return 0;
  std::vector<IntVector> dirs;
  for (const auto* p : ps)
    for (const auto& v : p->vertices()) dirs.push_back(subtract(v, p->vertices().front()));
  return rank(dirs, ps.front()->ambient_rank());
}

// ---------------------------------------------------------------------------
// Face lattice
// ---------------------------------------------------------------------------

struct FaceLattice {
  std::vector<VertexSet> faces;  // nonempty faces as vertex subsets
  std::vector<std::size_t> dims;
};

inline FaceLattice face_lattice(const LatticePolytope& p) {
  FaceLattice out;
  const std::size_t nv = p.vertices().size();
  std::vector<VertexSet> facet_sets;
  for (const auto& f : p.facets()) facet_sets.push_back(p.facet_vertices(f));
  std::map<VertexSet, std::size_t> seen;
  VertexSet all(nv);
  all.set();
  std::vector<VertexSet> queue{all};
  seen.emplace(all, 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexSet cur = queue[head];
    for (const auto& f : facet_sets) {
      VertexSet next = cur & f;
      if (next.none() || next == cur) continue;
      if (seen.emplace(next, queue.size()).second) queue.push_back(next);
    }
  }
  for (const auto& s : queue) {
    std::vector<IntVector> pts;
    for (std::size_t i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) pts.push_back(p.vertices()[i]);
    out.faces.push_back(s);
    out.dims.push_back(detail::affine_rank(pts));
  }
  return out;
}

inline std::vector<IntVector> vertices_of(const LatticePolytope& p, const VertexSet& s) {
  std::vector<IntVector> pts;
  for (std::size_t i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) pts.push_back(p.vertices()[i]);
  return pts;
}

// ---------------------------------------------------------------------------
// Volumes
// ---------------------------------------------------------------------------

namespace detail {

// Normalized volume of a full-dimensional polytope given by rational points
// in Q^d, via a pulling triangulation. Returns d! * Euclidean volume.
inline Rational full_dim_normalized_volume(const std::vector<RatVector>& pts, std::size_t d) {
  if (d == 0) return 1;
  RationalPolytope rp = RationalPolytope::hull(pts);
  const auto& verts = rp.vertices();
  // Integer model with the same face structure (scaled by a common denominator).
  Integer den = 1;
  for (const auto& v : verts)
    for (const auto& x : v) den = lcm(den, denominator(x));
  std::vector<IntVector> scaled;
  for (const auto& v : verts) {
    IntVector s(d);
    for (std::size_t i = 0; i < d; ++i) s[i] = numerator(Rational(v[i] * den));
    scaled.push_back(std::move(s));
  }
  LatticePolytope lp = LatticePolytope::hull(scaled);
  // vertex order of lp matches the sorted order of scaled points
  FaceLattice fl = face_lattice(lp);

  std::map<VertexSet, std::size_t> index;
  for (std::size_t i = 0; i < fl.faces.size(); ++i) index.emplace(fl.faces[i], i);
  std::vector<std::vector<std::size_t>> facets_of(fl.faces.size());
  for (std::size_t i = 0; i < fl.faces.size(); ++i)
    for (std::size_t j = 0; j < fl.faces.size(); ++j)
      if (fl.dims[j] + 1 == fl.dims[i] && fl.faces[j].is_subset_of(fl.faces[i])) facets_of[i].push_back(j);

  std::map<std::size_t, std::vector<std::vector<std::size_t>>> memo;
  std::function<const std::vector<std::vector<std::size_t>>&(std::size_t)> triangulate =
      [&](std::size_t f) -> const std::vector<std::vector<std::size_t>>& {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<std::size_t>> simplices;
    std::size_t apex = fl.faces[f].find_first();
    if (fl.dims[f] == 0) {
      simplices.push_back({apex});
    } else {
      for (std::size_t g : facets_of[f]) {
        if (fl.faces[g].test(apex)) continue;
        for (const auto& s : triangulate(g)) {
          auto t = s;
          t.push_back(apex);
          simplices.push_back(std::move(t));
        }
      }
    }
    return memo.emplace(f, std::move(simplices)).first->second;
  };

  const auto& top = triangulate(0);
  const auto& lv = lp.vertices();
  Integer total = 0;
  for (const auto& s : top) {
    IntMatrix m(d, d);
    for (std::size_t i = 1; i <= d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = lv[s[i]][j] - lv[s[0]][j];
    total += abs(determinant(m));
  }
  Integer scale_pow = 1;
  for (std::size_t i = 0; i < d; ++i) scale_pow *= den;
  return Rational(total) / Rational(scale_pow);
}

// Rational coordinates of the differences v - v0 in a basis of lat; throws
// SpanMismatch if some difference leaves span(lat).
inline std::vector<RatVector> lattice_coordinates(const std::vector<IntVector>& pts, const Sublattice& lat) {
  std::vector<RatVector> out;
  for (const auto& v : pts) {
    IntVector diff = subtract(v, pts.front());
    auto c = coordinates_in_span(lat.basis(), diff);
    if (!c) fail(ErrorKind::SpanMismatch, "polytope is not parallel to the span of the lattice");
    out.push_back(std::move(*c));
  }
  return out;
}

inline Rational volume_in_lattice(const std::vector<IntVector>& pts, const Sublattice& lat, bool allow_lower_dim) {
  if (lat.ambient_rank() != pts.front().size())
    fail(ErrorKind::DimensionMismatch, "lattice and polytope live in different ambient ranks");
  auto coords = lattice_coordinates(pts, lat);
  const std::size_t d = lat.rank();
  std::size_t pd = affine_rank(pts);
  if (pd != d) {
    if (allow_lower_dim && pd < d) return 0;
    fail(ErrorKind::SpanMismatch,
         "polytope has dimension " + std::to_string(pd) + " but the lattice has rank " + std::to_string(d));
  }
  return full_dim_normalized_volume(coords, d);
}

inline Integer require_integral(const Rational& v, const char* what) {
  if (denominator(v) != 1) fail(ErrorKind::NonIntegralVolume, std::string(what) + " " + to_string(v) + " is not an integer");
  return numerator(v);
}

}  // namespace detail

/// dim(P)! times the Euclidean volume measured in a basis of lat.
inline Integer normalized_volume(const LatticePolytope& p, const Sublattice& lat) {
  return detail::require_integral(detail::volume_in_lattice(p.vertices(), lat, false), "normalized volume");
}

inline Integer normalized_volume(const LatticePolytope& p) {
  return normalized_volume(p, Sublattice::full(p.ambient_rank()));
}

/// Normalized mixed volume (MV(P,...,P) = normalized_volume(P)) by
/// inclusion-exclusion over subfamily sums.
inline Integer mixed_volume(const std::vector<LatticePolytope>& ps, const Sublattice& lat) {
  const std::size_t m = ps.size();
  if (m != lat.rank())
    fail(ErrorKind::SpanMismatch,
         std::to_string(m) + " polytopes but the lattice has rank " + std::to_string(lat.rank()));
  if (m == 0) return 1;
  for (const auto& p : ps)
    if (p.ambient_rank() != lat.ambient_rank())
      fail(ErrorKind::DimensionMismatch, "lattice and polytope live in different ambient ranks");
  for (const auto& p : ps) detail::lattice_coordinates(p.vertices(), lat);

  std::vector<const LatticePolytope*> all;
  for (const auto& p : ps) all.push_back(&p);
  if (sum_dim(all) < m) return 0;

  Rational total = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<const LatticePolytope*> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) sub.push_back(&ps[i]);
    if (sum_dim(sub) < m) continue;
    LatticePolytope s = *sub.front();
    for (std::size_t i = 1; i < sub.size(); ++i) s = minkowski_sum(s, *sub[i]);
    Rational v = detail::volume_in_lattice(s.vertices(), lat, true);
    if ((m - sub.size()) % 2 == 0) total += v;
    else total -= v;
  }
  return detail::require_integral(total / Rational(factorial(m)), "mixed volume");
}

}  // namespace tropelim
