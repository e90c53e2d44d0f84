#include "echlab/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace echlab {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Integer IntMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Integer t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Integer IntMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
      if (pivot == n) return 0;
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<Integer> IntMatrix::characteristic_polynomial() const {
  if (!is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier; every division below is exact over the integers.
  const std::size_t n = rows_;
  std::vector<Integer> coeffs(n + 1);
  coeffs[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = (*this) * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += coeffs[n - k + 1];
    const Integer t = ((*this) * m).trace();
    if (!mpz_divisible_ui_p(t.get_mpz_t(), k)) throw std::logic_error("inexact Faddeev-LeVerrier step");
    coeffs[n - k] = -t / Integer(static_cast<unsigned long>(k));
  }
  return coeffs;
}

std::vector<Integer> IntMatrix::reversed_characteristic_polynomial() const {
  const std::vector<Integer> c = characteristic_polynomial();
  IntPolynomial out(c.rbegin(), c.rend());
  poly_trim(out);
  return out;
}

IntMatrix IntMatrix::power(unsigned long exponent) const {
  if (!is_square()) throw std::invalid_argument("power of non-square matrix");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Integer> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i == 0 ? "[" : ",[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ",";
      out += (*this)(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

namespace {

// Row i <- row i - q * row t, mirrored on the left transform.
void row_subtract(IntMatrix& S, IntMatrix& U, std::size_t i, std::size_t t, const Integer& q) {
  for (std::size_t j = 0; j < S.cols(); ++j) S(i, j) -= q * S(t, j);
  for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) -= q * U(t, j);
}

void col_subtract(IntMatrix& S, IntMatrix& V, std::size_t j, std::size_t t, const Integer& q) {
  for (std::size_t i = 0; i < S.rows(); ++i) S(i, j) -= q * S(i, t);
  for (std::size_t i = 0; i < V.rows(); ++i) V(i, j) -= q * V(i, t);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  SmithDecomposition out{IntMatrix::identity(m), A, IntMatrix::identity(n), 0};
  IntMatrix& U = out.U;
  IntMatrix& S = out.S;
  IntMatrix& V = out.V;

  const std::size_t diag = std::min(m, n);
  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(S(i, j)) == 0) continue;
          if (!found || abs(S(i, j)) < best) {
            best = abs(S(i, j));
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) break;
      S.swap_rows(t, pi);
      U.swap_rows(t, pi);
      S.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(S(i, t)) == 0) continue;
        row_subtract(S, U, i, t, Integer(S(i, t) / S(t, t)));
        if (sgn(S(i, t)) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(S(t, j)) == 0) continue;
        col_subtract(S, V, j, t, Integer(S(t, j) / S(t, t)));
        if (sgn(S(t, j)) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Enforce divisibility of the trailing block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            row_subtract(S, U, t, i, Integer(-1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (sgn(S(t, t)) < 0) {
      for (std::size_t j = 0; j < n; ++j) S(t, j) = -S(t, j);
      for (std::size_t j = 0; j < m; ++j) U(t, j) = -U(t, j);
    }
    if (sgn(S(t, t)) != 0) ++out.rank;
  }
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& basis) {
  if (!basis.is_square()) throw std::invalid_argument("hermite_normal_form expects a square basis");
  const std::size_t n = basis.rows();
  IntMatrix H = basis;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      while (sgn(H(i, j)) != 0) {
        const Integer q = H(i, i) / H(i, j);
        for (std::size_t r = 0; r < n; ++r) H(r, i) -= q * H(r, j);
        H.swap_cols(i, j);
      }
    }
    if (sgn(H(i, i)) == 0) throw std::invalid_argument("lattice basis is not full rank");
    if (sgn(H(i, i)) < 0)
      for (std::size_t r = 0; r < n; ++r) H(r, i) = -H(r, i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Integer q = floor_div(H(i, j), H(i, i));
      if (sgn(q) == 0) continue;
      for (std::size_t r = 0; r < n; ++r) H(r, j) -= q * H(r, i);
    }
  }
  return H;
}

IntMatrix integer_kernel(const IntMatrix& A) {
  const SmithDecomposition snf = smith_normal_form(A);
  const std::size_t n = A.cols();
  IntMatrix kernel(n, n - snf.rank);
  for (std::size_t k = snf.rank; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) kernel(i, k - snf.rank) = snf.V(i, k);
  return kernel;
}

IntPolynomial poly_multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

void poly_trim(IntPolynomial& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

}  // namespace echlab
