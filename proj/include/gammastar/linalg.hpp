#pragma once

#include <gammastar/groebner.hpp>
#include <gammastar/rational.hpp>

#include <unordered_map>
#include <vector>

namespace gammastar {

/// Dense exact matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("ragged matrix literal");
      for (long v : row) a_.emplace_back(v);
    }
  }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  QMatrix operator*(const QMatrix& b) const {
    if (cols_ != b.rows_) throw Error("matrix dimension mismatch");
    QMatrix c(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  QMatrix operator-(const QMatrix& b) const {
    QMatrix c = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
  }

  bool operator==(const QMatrix& b) const {
    return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Rank by fraction-free (Bareiss) elimination on the row-scaled integer
/// matrix.
inline std::size_t rank(const QMatrix& m) {
  std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (std::size_t i = 0; i < R; ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < C; ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).get_num() * (den / m(i, j).get_den());
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a[piv][c] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < C; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// A basis of the right kernel {v : M v = 0}, by Gauss-Jordan over Q.
inline std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  std::size_t R = m.rows(), C = m.cols();
  QMatrix a = m;
  std::vector<long> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a(piv, c) == 0) ++piv;
    if (piv == R) continue;
    for (std::size_t j = 0; j < C; ++j) std::swap(a(piv, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < C; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < C; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(long(c));
    ++r;
  }
  std::vector<bool> is_pivot(C, false);
  for (long c : pivot_col) is_pivot[std::size_t(c)] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(C);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) v[std::size_t(pivot_col[k])] = -a(k, free);
    out.push_back(std::move(v));
  }
  return out;
}

/// Multiplication by a polynomial on Q[vars]/I in the staircase basis.
struct MultiplicationOperator {
  QMatrix matrix;
  std::vector<Monomial> basis;
  Polynomial multiplier;
};

inline MultiplicationOperator multiplication_matrix(const Polynomial& f, const Ideal& I) {
  std::vector<Monomial> basis = staircase(I);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  QMatrix M(basis.size(), basis.size());
  Polynomial fr = normal_form(f, I);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Polynomial col = normal_form(fr.mul_term(basis[j], 1), I);
    for (const auto& t : col.terms()) M(index.at(t.mono), j) = t.coeff;
  }
  return {std::move(M), std::move(basis), f};
}

/// Algebraic multiplicity of the eigenvalue 0: dim - rank(M^dim).
inline std::size_t eigenvalue_zero_multiplicity(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error("eigenvalue multiplicity of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 0;
  QMatrix p = m;
  for (std::size_t k = 1; k < n; k *= 2) p = p * p;
  return n - rank(p);
}

inline std::size_t eigenvalue_zero_multiplicity(const MultiplicationOperator& op) {
  return eigenvalue_zero_multiplicity(op.matrix);
}

}  // namespace gammastar
