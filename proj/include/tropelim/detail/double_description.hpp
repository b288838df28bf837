// Exact double description method: converts { x : A x >= 0, E x = 0 } into
// extreme rays plus a lineality basis. Everything is integer valued.
#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tropelim/exact.hpp"

namespace tropelim::detail {

struct ConeDescription {
  std::vector<IntVector> rays;       // primitive, one per extreme ray (modulo lineality)
  std::vector<IntVector> lineality;  // integer basis of the lineality space
};

namespace dd {

inline IntVector combine(const IntVector& pos, const Integer& pos_val, const IntVector& neg, const Integer& neg_val) {
  IntVector v(pos.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = pos_val * neg[i] - neg_val * pos[i];
  return primitive(v);
}

// Extreme rays of the pointed cone { t : rows . t >= 0 } where rows has full
// column rank p.
inline std::vector<IntVector> pointed_rays(const std::vector<IntVector>& rows, std::size_t p) {
  const std::size_t k = rows.size();
  std::vector<std::size_t> basis_rows;
  {
    std::vector<IntVector> chosen;
    for (std::size_t i = 0; i < k && chosen.size() < p; ++i) {
      chosen.push_back(rows[i]);
      if (rank(chosen, p) == chosen.size()) {
        basis_rows.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }

  struct Ray {
    IntVector v;
    boost::dynamic_bitset<> zeros;
  };
  std::vector<Ray> rays;
  boost::dynamic_bitset<> processed(k);

  RatMatrix ab(p, RatVector(p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) ab[i][j] = rows[basis_rows[i]][j];
  for (std::size_t j = 0; j < p; ++j) {
    RatVector rhs(p, Rational(0));
    rhs[j] = 1;
    auto sol = solve_linear(ab, rhs, p);
    Ray r{primitive(*sol), boost::dynamic_bitset<>(k)};
    for (std::size_t i = 0; i < p; ++i)
      if (i != j) r.zeros.set(basis_rows[i]);
    rays.push_back(std::move(r));
  }
  for (std::size_t i : basis_rows) processed.set(i);

  for (std::size_t row = 0; row < k; ++row) {
    if (processed.test(row)) continue;
    const IntVector& a = rows[row];
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      val[j] = dot(a, rays[j].v);
      if (val[j] > 0) pos.push_back(j);
      else if (val[j] < 0) neg.push_back(j);
      else rays[j].zeros.set(row);
    }
    processed.set(row);
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (val[j] >= 0) next.push_back(rays[j]);
    for (std::size_t ip : pos)
      for (std::size_t in : neg) {
        boost::dynamic_bitset<> common = rays[ip].zeros & rays[in].zeros;
        if (p >= 2 && common.count() + 2 < p) continue;
        bool adjacent = true;
        for (std::size_t j = 0; j < rays.size() && adjacent; ++j) {
          if (j == ip || j == in) continue;
          if (common.is_subset_of(rays[j].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{combine(rays[ip].v, val[ip], rays[in].v, val[in]), common};
        r.zeros.set(row);
        next.push_back(std::move(r));
      }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end(), [](const IntVector& x, const IntVector& y) { return compare(x, y) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dd

/// Generators of { x in Q^n : a . x >= 0 for a in ineqs, e . x = 0 for e in eqs }.
inline ConeDescription solve_cone(const std::vector<IntVector>& ineqs, const std::vector<IntVector>& eqs,
                                  std::size_t n) {
  ConeDescription out;
  if (n == 0) return out;
  std::vector<IntVector> z = kernel_basis(eqs, n);
  const std::size_t m = z.size();
  if (m == 0) return out;

  auto lift = [&](const IntVector& y) {
    IntVector x = zero_vector(n);
    for (std::size_t j = 0; j < m; ++j)
      if (y[j] != 0)
        for (std::size_t i = 0; i < n; ++i) x[i] += y[j] * z[j][i];
    return x;
  };

  std::vector<IntVector> a1;
  for (const auto& a : ineqs) {
    IntVector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = dot(a, z[j]);
    if (!is_zero(row)) a1.push_back(primitive(row));
  }
  std::sort(a1.begin(), a1.end(), [](const IntVector& x, const IntVector& y) { return compare(x, y) < 0; });
  a1.erase(std::unique(a1.begin(), a1.end()), a1.end());

  for (const auto& y : kernel_basis(a1, m)) out.lineality.push_back(lift(y));
  if (a1.empty()) return out;

  std::vector<IntVector> r = hermite_rows(a1, m);
  const std::size_t p = r.size();
  std::vector<IntVector> a2;
  for (const auto& a : a1) {
    IntVector row(p);
    for (std::size_t j = 0; j < p; ++j) row[j] = dot(a, r[j]);
    a2.push_back(primitive(row));
  }
  for (const auto& t : dd::pointed_rays(a2, p)) {
    IntVector y = zero_vector(m);
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t i = 0; i < m; ++i) y[i] += t[j] * r[j][i];
    out.rays.push_back(primitive(lift(y)));
  }
  return out;
}

}  // namespace tropelim::detail
