/**
 * Exact integer and rational arithmetic plus the integer-lattice linear
 * algebra (Hermite and Smith normal forms, kernels, saturation, indices)
 * that every multiplicity and volume computation in the library rests on.
 *
 * Nothing in here touches floating point.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropelim/error.hpp"

namespace tropelim {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline int sign(const Integer& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }
inline int sign(const Rational& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Floor division for b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

struct ExtendedGcd {
  Integer g, x, y;  // x*a + y*b = g >= 0
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::string to_string(const Integer& a) { return a.str(); }
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// ---------------------------------------------------------------------------
// Vector helpers
// ---------------------------------------------------------------------------

inline IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

inline IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector e = zero_vector(n);
  e[i] = 1;
  return e;
}

inline IntVector to_int_vector(std::initializer_list<long long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long long x : values) v.emplace_back(x);
  return v;
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline IntVector subtract(const IntVector& a, const IntVector& b) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline IntVector scale(const IntVector& a, const Integer& k) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * k;
  return c;
}

inline IntVector negate(const IntVector& a) { return scale(a, Integer(-1)); }

inline Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

/// Divides v by the gcd of its entries; the sign is preserved.
inline IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) fail(ErrorKind::ZeroVector, "primitive() of the zero vector");
  IntVector p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
  return p;
}

/// Positive rescaling of a nonzero rational vector to a primitive integer one.
inline IntVector primitive(const RatVector& v) {
  Integer den = 1;
  for (const auto& q : v) den = lcm(den, denominator(q));
  IntVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = numerator(v[i]) * (den / denominator(v[i]));
  return primitive(w);
}

/// Positive integer multiple of a rational vector (not reduced).
inline IntVector clear_denominators(const RatVector& v) {
  Integer den = 1;
  for (const auto& q : v) den = lcm(den, denominator(q));
  IntVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = numerator(v[i]) * (den / denominator(v[i]));
  return w;
}

inline RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

inline int compare(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// IntMatrix
// ---------------------------------------------------------------------------

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<IntVector> r;
    for (const auto& row : rows) r.push_back(to_int_vector(row));
    return from_rows(r, r.empty() ? 0 : r.front().size());
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<IntVector> row_vectors() const {
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Matrix-vector product A*v.
  IntVector apply(const IntVector& v) const {
    if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  RatVector apply(const RatVector& v) const {
    RatVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += Rational((*this)(i, j)) * v[j];
      out[i] = s;
    }
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product size mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }
  /// Replaces (row a, row b) by (x*a + y*b, u*a + v*b).
  void combine_rows(std::size_t a, std::size_t b, const Integer& x, const Integer& y, const Integer& u,
                    const Integer& v) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Integer ra = (*this)(a, j), rb = (*this)(b, j);
      (*this)(a, j) = x * ra + y * rb;
      (*this)(b, j) = u * ra + v * rb;
    }
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 0) return 1;
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sgn * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Hermite normal form
// ---------------------------------------------------------------------------

struct HermiteResult {
  IntMatrix H;  ///< row echelon form, positive pivots, entries above pivots in [0, pivot)
  IntMatrix U;  ///< unimodular with U * M = H
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

namespace detail {

template <bool TrackTransform>
HermiteResult hermite_impl(const IntMatrix& m) {
  HermiteResult res;
  res.H = m;
  IntMatrix& H = res.H;
  const std::size_t rows = m.rows(), cols = m.cols();
  if constexpr (TrackTransform) res.U = IntMatrix::identity(rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (H(i, c) == 0) continue;
      const Integer a = H(r, c), b = H(i, c);
      ExtendedGcd e = extended_gcd(a, b);
      const Integer u = -b / e.g, v = a / e.g;
      H.combine_rows(r, i, e.x, e.y, u, v);
      if constexpr (TrackTransform) res.U.combine_rows(r, i, e.x, e.y, u, v);
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      if constexpr (TrackTransform) res.U.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(H(i, c), H(r, c));
      if (q != 0) {
        H.add_row_multiple(i, r, -q);
        if constexpr (TrackTransform) res.U.add_row_multiple(i, r, -q);
      }
    }
    res.pivot_columns.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

}  // namespace detail

/// Row-style Hermite normal form: U * M = H with U unimodular.
inline HermiteResult hermite_normal_form(const IntMatrix& m) { return detail::hermite_impl<true>(m); }

/// Nonzero rows of the Hermite normal form of the matrix whose rows are given.
inline std::vector<IntVector> hermite_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (rows.empty()) return {};
  HermiteResult h = detail::hermite_impl<false>(IntMatrix::from_rows(rows, cols));
  std::vector<IntVector> out;
  out.reserve(h.rank);
  for (std::size_t i = 0; i < h.rank; ++i) out.push_back(h.H.row(i));
  return out;
}

inline std::size_t rank(const std::vector<IntVector>& rows, std::size_t cols) {
  if (rows.empty() || cols == 0) return 0;
  // Fraction-free elimination; cheaper than a full Hermite reduction.
  std::vector<IntVector> m = rows;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Integer g = gcd(m[r][c], m[i][c]);
      Integer a = m[i][c] / g, b = m[r][c] / g;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * b - m[r][j] * a;
    }
    ++r;
  }
  return r;
}

/// Saturated integer basis of { x in Z^n : row . x = 0 for every row }.
inline std::vector<IntVector> kernel_basis(const std::vector<IntVector>& rows, std::size_t n) {
  std::vector<IntVector> nonzero;
  for (const auto& r : rows)
    if (!is_zero(r)) nonzero.push_back(r);
  if (nonzero.empty()) {
    std::vector<IntVector> id;
    for (std::size_t i = 0; i < n; ++i) id.push_back(unit_vector(n, i));
    return id;
  }
  IntMatrix mt = IntMatrix::from_rows(nonzero, n).transpose();  // n x m
  HermiteResult h = hermite_normal_form(mt);
  std::vector<IntVector> ker;
  for (std::size_t i = h.rank; i < n; ++i) ker.push_back(h.U.row(i));
  return ker;
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

struct SmithResult {
  IntMatrix U, S, V;  ///< U * M * V = S, U and V unimodular, S diagonal with s1 | s2 | ...
  std::size_t rank = 0;

  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> f;
    for (std::size_t i = 0; i < rank; ++i) f.push_back(S(i, i));
    return f;
  }
};

inline SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res;
  const std::size_t rows = m.rows(), cols = m.cols();
  res.S = m;
  res.U = IntMatrix::identity(rows);
  res.V = IntMatrix::identity(cols);
  IntMatrix& S = res.S;
  const std::size_t diag = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < diag; ++t) {
    bool found_any = false;
    while (true) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (S(i, j) != 0 && (bi == rows || abs(S(i, j)) < abs(S(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      found_any = true;
      S.swap_rows(t, bi);
      res.U.swap_rows(t, bi);
      S.swap_cols(t, bj);
      res.V.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = S(i, t) / S(t, t);
        S.add_row_multiple(i, t, -q);
        res.U.add_row_multiple(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = S(t, j) / S(t, t);
        S.add_col_multiple(j, t, -q);
        res.V.add_col_multiple(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (S(i, j) % S(t, t) != 0) {
            S.add_row_multiple(t, i, 1);
            res.U.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!found_any) break;
    if (S(t, t) < 0) {
      S.negate_row(t);
      res.U.negate_row(t);
    }
  }
  res.rank = t;
  return res;
}

// ---------------------------------------------------------------------------
// Rational linear algebra
// ---------------------------------------------------------------------------

using RatMatrix = std::vector<RatVector>;

/// Solves A x = b (A given by rows, k unknowns). Returns one solution, or
/// nothing when the system is inconsistent. Free variables are set to zero.
inline std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b, std::size_t unknowns) {
  const std::size_t m = a.size();
  RatMatrix aug(m, RatVector(unknowns + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) aug[i][j] = a[i][j];
    aug[i][unknowns] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < m; ++c) {
    std::size_t p = r;
    while (p < m && aug[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[r], aug[p]);
    Rational inv = 1 / aug[r][c];
    for (std::size_t j = c; j <= unknowns; ++j) aug[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = c; j <= unknowns; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (aug[i][unknowns] != 0) return std::nullopt;
  RatVector x(unknowns, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = aug[i][unknowns];
  return x;
}

/// Coordinates c with sum_i c_i * basis[i] = v, if v lies in the rational span.
inline std::optional<RatVector> coordinates_in_span(const std::vector<IntVector>& basis, const IntVector& v) {
  const std::size_t k = basis.size(), n = v.size();
  RatMatrix a(n, RatVector(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
  return solve_linear(a, to_rational(v), k);
}

// ---------------------------------------------------------------------------
// Sublattice
// ---------------------------------------------------------------------------

/// A subgroup of Z^n held by its canonical Hermite basis, so that equality of
/// lattices is equality of representations.
class Sublattice {
 public:
  Sublattice() = default;

  static Sublattice generated_by(const std::vector<IntVector>& generators, std::size_t ambient_rank) {
    Sublattice s;
    s.ambient_ = ambient_rank;
    for (const auto& g : generators)
      if (g.size() != ambient_rank) fail(ErrorKind::DimensionMismatch, "generator has the wrong length");
    s.basis_ = hermite_rows(generators, ambient_rank);
    s.compute_pivots();
    return s;
  }

  static Sublattice full(std::size_t n) {
    std::vector<IntVector> id;
    for (std::size_t i = 0; i < n; ++i) id.push_back(unit_vector(n, i));
    return generated_by(id, n);
  }

  static Sublattice zero(std::size_t n) { return generated_by({}, n); }

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  IntMatrix basis_matrix() const { return IntMatrix::from_rows(basis_, ambient_); }

  /// Integer coordinates of v in the basis, if v belongs to the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const {
    if (v.size() != ambient_) fail(ErrorKind::DimensionMismatch, "vector length differs from ambient rank");
    IntVector residual = v;
    IntVector x(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (residual[p] % basis_[i][p] != 0) return std::nullopt;
      x[i] = residual[p] / basis_[i][p];
      if (x[i] != 0)
        for (std::size_t j = p; j < ambient_; ++j) residual[j] -= x[i] * basis_[i][j];
    }
    if (!is_zero(residual)) return std::nullopt;
    return x;
  }

  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  /// Membership in the rational span of the lattice.
  bool span_contains(const IntVector& v) const {
    std::vector<IntVector> rows = basis_;
    rows.push_back(v);
    return tropelim::rank(rows, ambient_) == basis_.size();
  }

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  friend int compare(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_ ? -1 : 1;
    if (a.basis_.size() != b.basis_.size()) return a.basis_.size() < b.basis_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
      if (int c = tropelim::compare(a.basis_[i], b.basis_[i]); c != 0) return c;
    return 0;
  }

 private:
  void compute_pivots() {
    pivots_.clear();
    for (const auto& row : basis_) {
      std::size_t p = 0;
      while (row[p] == 0) ++p;
      pivots_.push_back(p);
    }
  }

  std::size_t ambient_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// [sup : sub] for sub a finite-index sublattice of sup.
inline Integer lattice_index(const Sublattice& sub, const Sublattice& sup) {
  if (sub.ambient_rank() != sup.ambient_rank())
    fail(ErrorKind::DimensionMismatch, "lattices live in different ambient ranks");
  if (sub.rank() != sup.rank())
    fail(ErrorKind::RankMismatch, "ranks " + std::to_string(sub.rank()) + " and " + std::to_string(sup.rank()) +
                                      " differ; the index is infinite");
  const std::size_t k = sub.rank();
  IntMatrix coords(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto c = sup.coordinates(sub.basis()[i]);
    if (!c) fail(ErrorKind::NotContained, "sublattice is not contained in the superlattice");
    for (std::size_t j = 0; j < k; ++j) coords(i, j) = (*c)[j];
  }
  return abs(determinant(coords));
}

/// Intersection of the rational span of the lattice with the ambient Z^n.
inline Sublattice saturate(const Sublattice& sub) {
  if (sub.rank() == 0 || sub.rank() == sub.ambient_rank()) {
    return sub.rank() == 0 ? sub : Sublattice::full(sub.ambient_rank());
  }
  auto orth = kernel_basis(sub.basis(), sub.ambient_rank());
  return Sublattice::generated_by(kernel_basis(orth, sub.ambient_rank()), sub.ambient_rank());
}

/// Z^n intersected with the orthogonal complement of the given vectors.
inline Sublattice orthogonal_lattice(const std::vector<IntVector>& vectors, std::size_t n) {
  return Sublattice::generated_by(kernel_basis(vectors, n), n);
}

/// Image of a lattice under an integer linear map.
inline Sublattice image(const IntMatrix& a, const Sublattice& lat) {
  std::vector<IntVector> gens;
  for (const auto& b : lat.basis()) gens.push_back(a.apply(b));
  return Sublattice::generated_by(gens, a.rows());
}

// ---------------------------------------------------------------------------
// Reduction modulo a rational subspace
// ---------------------------------------------------------------------------

/// Integer echelon basis of a rational subspace whose rows vanish on each
/// other's pivot columns. Reducing a vector with it gives a canonical
/// representative of the vector's class modulo the subspace.
class SubspaceReducer {
 public:
  SubspaceReducer() = default;
  explicit SubspaceReducer(const std::vector<IntVector>& spanning, std::size_t n) : n_(n) {
    std::vector<IntVector> rows = hermite_rows(spanning, n);
    for (const auto& r : rows) {
      std::size_t p = 0;
      while (r[p] == 0) ++p;
      pivots_.push_back(p);
    }
    // Clear each pivot column in the other rows (fraction free).
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) {
        if (i == j || rows[j][pivots_[i]] == 0) continue;
        Integer a = rows[j][pivots_[i]], b = rows[i][pivots_[i]];
        for (std::size_t c = 0; c < n; ++c) rows[j][c] = rows[j][c] * b - rows[i][c] * a;
        rows[j] = primitive(rows[j]);
        if (rows[j][pivots_[j]] < 0) rows[j] = negate(rows[j]);
      }
    rows_ = std::move(rows);
  }

  std::size_t dimension() const { return rows_.size(); }

  /// Positive multiple of v minus an element of the subspace, zero on pivots.
  IntVector reduce(IntVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (v[p] == 0) continue;
      Integer a = v[p], b = rows_[i][p];
      Integer g = gcd(a, b);
      a /= g;
      b /= g;
      for (std::size_t c = 0; c < n_; ++c) v[c] = v[c] * b - rows_[i][c] * a;
    }
    return v;
  }

 private:
  std::size_t n_ = 0;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace tropelim
