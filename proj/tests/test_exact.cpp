#include <gtest/gtest.h>

#include <random>

#include "tropelim/exact.hpp"

using namespace tropelim;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Cofactor expansion; independent of the Bareiss routine under test.
Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor(i - 1, cc++) = m(i, k);
    }
    Integer t = m(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? t : Integer(-t);
  }
  return total;
}

bool is_hermite(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool zero_rows = false;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h(i, p) == 0) ++p;
    if (p == h.cols()) {
      zero_rows = true;
      continue;
    }
    if (zero_rows) return false;
    if (i > 0 && p <= last_pivot) return false;
    if (h(i, p) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, p) < 0 || h(k, p) >= h(i, p)) return false;
    last_pivot = p;
  }
  return true;
}

}  // namespace

TEST(Hermite, IdentityIsFixed) {
  auto h = hermite_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(h.H, IntMatrix::identity(2));
  EXPECT_EQ(h.U, IntMatrix::identity(2));
}

TEST(Hermite, SmallExample) {
  auto m = IntMatrix::from_rows({{2, 4}, {1, 3}});
  auto h = hermite_normal_form(m);
  EXPECT_EQ(h.H, IntMatrix::from_rows({{1, 1}, {0, 2}}));
  EXPECT_EQ(h.U * m, h.H);
  EXPECT_EQ(abs(determinant(h.U)), 1);
}

TEST(Hermite, ZeroMatrix) {
  auto h = hermite_normal_form(IntMatrix(2, 2));
  EXPECT_EQ(h.H, IntMatrix(2, 2));
  EXPECT_EQ(h.rank, 0u);
}

TEST(Hermite, RandomPropertiesAndIdempotence) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    auto m = random_matrix(rng, r, c, -6, 6);
    auto h = hermite_normal_form(m);
    ASSERT_TRUE(is_hermite(h.H));
    ASSERT_EQ(h.U * m, h.H);
    ASSERT_EQ(abs(determinant(h.U)), 1);
    ASSERT_EQ(hermite_normal_form(h.H).H, h.H);
  }
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).S, IntMatrix::identity(3));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).S, IntMatrix::from_rows({{1, 0}, {0, 6}}));
  EXPECT_EQ(smith_normal_form(IntMatrix::from_rows({{2, 4}, {1, 3}})).S, IntMatrix::from_rows({{1, 0}, {0, 2}}));
}

TEST(Smith, RandomReconstructionAndDivisibility) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    auto m = random_matrix(rng, r, c, -8, 8);
    auto s = smith_normal_form(m);
    ASSERT_EQ(s.U * m * s.V, s.S);
    ASSERT_EQ(abs(determinant(s.U)), 1);
    ASSERT_EQ(abs(determinant(s.V)), 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) ASSERT_EQ(s.S(i, j), 0);
    auto f = s.invariant_factors();
    for (std::size_t i = 0; i + 1 < f.size(); ++i) ASSERT_EQ(f[i + 1] % f[i], 0);
    for (const auto& x : f) ASSERT_GT(x, 0);
    if (r == c) {
      Integer prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= s.S(i, i);
      ASSERT_EQ(prod, abs(laplace_det(m)));
    }
  }
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 5;
    auto m = random_matrix(rng, n, n, -5, 5);
    ASSERT_EQ(determinant(m), laplace_det(m));
  }
}

TEST(LatticeIndex, Examples) {
  auto z2 = Sublattice::full(2);
  EXPECT_EQ(lattice_index(z2, z2), 1);
  auto sub = Sublattice::generated_by({to_int_vector({2, 1}), to_int_vector({0, 3})}, 2);
  EXPECT_EQ(lattice_index(sub, z2), 6);
  auto two = Sublattice::generated_by({to_int_vector({2})}, 1);
  EXPECT_EQ(lattice_index(two, Sublattice::full(1)), 2);
}

TEST(LatticeIndex, Errors) {
  auto line = Sublattice::generated_by({to_int_vector({1, 0})}, 2);
  try {
    lattice_index(line, Sublattice::full(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankMismatch);
  }
  auto a = Sublattice::generated_by({to_int_vector({1, 0})}, 2);
  auto b = Sublattice::generated_by({to_int_vector({2, 0})}, 2);
  try {
    lattice_index(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotContained);
  }
}

TEST(LatticeIndex, Multiplicative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 3;
    auto step1 = random_matrix(rng, n, n, -3, 3);
    auto step2 = random_matrix(rng, n, n, -3, 3);
    if (determinant(step1) == 0 || determinant(step2) == 0) continue;
    auto sup = Sublattice::full(n);
    auto mid = Sublattice::generated_by(step1.row_vectors(), n);
    auto sub = Sublattice::generated_by((step2 * step1).row_vectors(), n);
    ASSERT_EQ(lattice_index(sub, mid) * lattice_index(mid, sup), lattice_index(sub, sup));
    ASSERT_EQ(lattice_index(sub, sup), abs(determinant(step2 * step1)));
  }
}

TEST(Saturate, Examples) {
  auto s = saturate(Sublattice::generated_by({to_int_vector({2, 0})}, 2));
  EXPECT_EQ(s, Sublattice::generated_by({to_int_vector({1, 0})}, 2));
  auto full = saturate(Sublattice::generated_by({to_int_vector({2, 1}), to_int_vector({0, 3})}, 2));
  EXPECT_EQ(full, Sublattice::full(2));
  EXPECT_EQ(saturate(Sublattice::full(2)), Sublattice::full(2));
}

TEST(Saturate, IdempotentAndMinimal) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 3, k = 1 + rng() % (n - 1);
    auto gens = random_matrix(rng, k, n, -4, 4).row_vectors();
    auto sub = Sublattice::generated_by(gens, n);
    auto sat = saturate(sub);
    ASSERT_EQ(sat.rank(), sub.rank());
    ASSERT_EQ(saturate(sat), sat);
    for (const auto& b : sub.basis()) ASSERT_TRUE(sat.contains(b));
    Integer base = lattice_index(sub, sat);
    std::vector<IntVector> bigger = sub.basis();
    for (const auto& b : sat.basis()) {
      bigger.push_back(b);
      auto mid = Sublattice::generated_by(bigger, n);
      ASSERT_EQ(base % lattice_index(sub, mid), 0);
      ASSERT_EQ(lattice_index(sub, mid) * lattice_index(mid, sat), base);
    }
  }
}

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive(to_int_vector({2, 4, 6})), to_int_vector({1, 2, 3}));
  EXPECT_EQ(primitive(to_int_vector({-3, 6})), to_int_vector({-1, 2}));
  EXPECT_EQ(primitive(to_int_vector({12, 6})), to_int_vector({2, 1}));
  try {
    primitive(to_int_vector({0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroVector);
  }
}

TEST(Kernel, BasisIsSaturatedAndAnnihilated) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 4, m = 1 + rng() % 3;
    auto rows = random_matrix(rng, m, n, -3, 3).row_vectors();
    auto ker = kernel_basis(rows, n);
    ASSERT_EQ(ker.size() + rank(rows, n), n);
    for (const auto& k : ker)
      for (const auto& r : rows) ASSERT_EQ(dot(k, r), 0);
    if (!ker.empty()) {
      auto lat = Sublattice::generated_by(ker, n);
      ASSERT_EQ(saturate(lat), lat);
    }
  }
}

TEST(SubspaceReducer, CanonicalModuloSubspace) {
  SubspaceReducer red({to_int_vector({1, 1, 0})}, 3);
  auto a = red.reduce(to_int_vector({2, 3, 1}));
  auto b = red.reduce(to_int_vector({5, 6, 1}));
  EXPECT_EQ(primitive(a), primitive(b));
  EXPECT_EQ(a[0], 0);
}
