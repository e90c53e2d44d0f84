#pragma once

#include "echlab/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace echlab {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::vector<Integer>> to_rows() const;

  IntMatrix transpose() const;
  Integer trace() const;
  /// Fraction-free (Bareiss) elimination.
  Integer determinant() const;
  /// Coefficients c_0..c_n of det(x I - A), lowest degree first.
  std::vector<Integer> characteristic_polynomial() const;
  /// Coefficients of det(I - t A), lowest degree first.
  std::vector<Integer> reversed_characteristic_polynomial() const;
  IntMatrix power(unsigned long exponent) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V == S with U, V unimodular and S diagonal, each diagonal entry
/// nonnegative and dividing the next.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  std::size_t rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

/// Column-style Hermite normal form of a full-rank square basis (lattice
/// vectors are the columns): lower triangular, positive diagonal, entries left
/// of the diagonal reduced into [0, diagonal).
IntMatrix hermite_normal_form(const IntMatrix& basis);

/// Basis of the integer kernel {x : A x = 0}, one vector per column.
IntMatrix integer_kernel(const IntMatrix& A);

// Polynomials with integer coefficients, lowest degree first, no trailing zeros.
using IntPolynomial = std::vector<Integer>;

IntPolynomial poly_multiply(const IntPolynomial& a, const IntPolynomial& b);
void poly_trim(IntPolynomial& p);

}  // namespace echlab
