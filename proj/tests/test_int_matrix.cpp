#include "echlab/int_matrix.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace echlab;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

// Cofactor expansion along the first row.
Integer cofactor_determinant(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    const Integer term = a(0, j) * cofactor_determinant(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

Integer evaluate(const std::vector<Integer>& poly, const Integer& x) {
  Integer value = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) value = value * x + *it;
  return value;
}

}  // namespace

TEST(IntMatrix, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix a = random_matrix(rng, n, n, 9);
    EXPECT_EQ(a.determinant(), cofactor_determinant(a)) << a.to_string();
  }
  EXPECT_EQ(IntMatrix().determinant(), 1);
}

TEST(IntMatrix, CharacteristicPolynomialEvaluatesToDeterminant) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix a = random_matrix(rng, n, n, 6);
    const std::vector<Integer> chi = a.characteristic_polynomial();
    const std::vector<Integer> reversed = a.reversed_characteristic_polynomial();
    for (long x = -3; x <= 3; ++x) {
      IntMatrix xi_minus_a(n, n);
      IntMatrix one_minus_ta(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          xi_minus_a(i, j) = (i == j ? Integer(x) : Integer(0)) - a(i, j);
          one_minus_ta(i, j) = (i == j ? Integer(1) : Integer(0)) - Integer(x) * a(i, j);
        }
      EXPECT_EQ(evaluate(chi, Integer(x)), cofactor_determinant(xi_minus_a));
      EXPECT_EQ(evaluate(reversed, Integer(x)), cofactor_determinant(one_minus_ta));
    }
  }
}

TEST(IntMatrix, PowerTelescopes) {
  const IntMatrix cat{{2, 1}, {1, 1}};
  for (unsigned long p = 0; p < 12; ++p)
    for (unsigned long q = 0; q < 12; ++q)
      EXPECT_EQ((cat.power(p + q)).trace(), (cat.power(p) * cat.power(q)).trace());
  EXPECT_EQ(cat.power(0), IntMatrix::identity(2));
  EXPECT_EQ(cat.power(3), cat * cat * cat);
}

TEST(SmithNormalForm, DecompositionProperties) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + (trial / 4) % 4;
    IntMatrix a = random_matrix(rng, rows, cols, 12);
    if (trial % 7 == 0 && rows > 1)
      for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = 2 * a(0, j);
    const SmithDecomposition snf = smith_normal_form(a);
    EXPECT_EQ(snf.U * a * snf.V, snf.S);
    const Integer du = snf.U.determinant();
    const Integer dv = snf.V.determinant();
    EXPECT_TRUE(du == 1 || du == -1);
    EXPECT_TRUE(dv == 1 || dv == -1);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (i != j) EXPECT_EQ(snf.S(i, j), 0);
      }
    const std::size_t diag = std::min(rows, cols);
    for (std::size_t i = 0; i < diag; ++i) {
      EXPECT_GE(sgn(snf.S(i, i)), 0);
      if (sgn(snf.S(i, i)) != 0) ++rank;
      if (i + 1 < diag && sgn(snf.S(i, i)) != 0) {
        Integer rem;
        mpz_tdiv_r(rem.get_mpz_t(), snf.S(i + 1, i + 1).get_mpz_t(), snf.S(i, i).get_mpz_t());
        EXPECT_EQ(rem, 0);
      }
      if (i + 1 < diag && sgn(snf.S(i, i)) == 0) EXPECT_EQ(snf.S(i + 1, i + 1), 0);
    }
    EXPECT_EQ(snf.rank, rank);
  }
}

TEST(SmithNormalForm, KnownInvariantFactors) {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithDecomposition snf = smith_normal_form(a);
  EXPECT_EQ(snf.S(0, 0), 2);
  EXPECT_EQ(snf.S(1, 1), 6);
  EXPECT_EQ(snf.S(2, 2), 12);
}

TEST(IntegerKernel, SpansTheKernel) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 3;
    const std::size_t cols = rows + 1 + trial % 2;
    const IntMatrix a = random_matrix(rng, rows, cols, 7);
    const IntMatrix k = integer_kernel(a);
    const IntMatrix product = a * k;
    for (std::size_t i = 0; i < product.rows(); ++i)
      for (std::size_t j = 0; j < product.cols(); ++j) EXPECT_EQ(product(i, j), 0);
    EXPECT_EQ(k.cols(), cols - smith_normal_form(a).rank);
  }
  // Saturated basis: the 2x2 minors of the kernel basis are coprime.
  const IntMatrix k = integer_kernel(IntMatrix{{1, -2, 0}});
  ASSERT_EQ(k.cols(), 2u);
  Integer g = 0;
  for (std::size_t r1 = 0; r1 < 3; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < 3; ++r2) g = gcd(g, Integer(k(r1, 0) * k(r2, 1) - k(r1, 1) * k(r2, 0)));
  EXPECT_EQ(g, 1);
}

TEST(HermiteNormalForm, LowerTriangularAndSameLattice) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    IntMatrix basis = random_matrix(rng, n, n, 8);
    if (sgn(basis.determinant()) == 0) continue;
    const IntMatrix h = hermite_normal_form(basis);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_GT(sgn(h(i, i)), 0);
      for (std::size_t j = i + 1; j < n; ++j) EXPECT_EQ(h(i, j), 0);
      for (std::size_t j = 0; j < i; ++j) {
        EXPECT_GE(sgn(h(i, j)), 0);
        EXPECT_LT(h(i, j), h(i, i));
      }
    }
    EXPECT_EQ(h.determinant(), Integer(abs(basis.determinant())));
    // Same lattice: H = B W with W unimodular.
    const Integer det_b = basis.determinant();
    IntMatrix adjugate(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 0, rr = 0; r < n; ++r) {
          if (r == j) continue;
          for (std::size_t c = 0, cc = 0; c < n; ++c)
            if (c != i) minor(rr, cc++) = basis(r, c);
          ++rr;
        }
        adjugate(i, j) = ((i + j) % 2 == 0 ? Integer(1) : Integer(-1)) * cofactor_determinant(minor);
      }
    // adj(B) H = det(B) W, so every entry must be divisible by det B.
    const IntMatrix scaled = adjugate * h;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_TRUE(mpz_divisible_p(scaled(i, j).get_mpz_t(), det_b.get_mpz_t()));
  }
  EXPECT_THROW(hermite_normal_form(IntMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
}

TEST(Polynomial, MultiplyAndTrim) {
  IntPolynomial a{Integer(1), Integer(-1)};
  IntPolynomial sq = poly_multiply(a, a);
  EXPECT_EQ(sq, (IntPolynomial{1, -2, 1}));
  IntPolynomial padded{Integer(3), Integer(0), Integer(0)};
  poly_trim(padded);
  EXPECT_EQ(padded, (IntPolynomial{3}));
}
