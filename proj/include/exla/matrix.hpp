#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <utility>
#include <vector>

#include "exla/errors.hpp"
#include "exla/rational.hpp"

namespace exla {

// Dense matrix over an exact scalar type (GaussRat for almost everything,
// QuatC for the sp(3) module). Only the operations a given instantiation
// actually uses need to exist on T.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero() const {
    for (const T& v : e_)
      if (!(v == T())) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  T trace() const {
    T s{};
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
    return s;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = -e_[k];
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (T& v : m.e_) v = s * v;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> w(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      T s{};
      for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
      w[i] = s;
    }
    return w;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i == 0 ? "[" : " ");
      for (std::size_t j = 0; j < m.cols_; ++j) os << m(i, j) << (j + 1 < m.cols_ ? ", " : "");
      os << (i + 1 < m.rows_ ? ";\n" : "]");
    }
    return os;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> e_;
};

template <typename T>
struct Echelon {
  Matrix<T> u;                  // row echelon form
  std::vector<std::size_t> pivot_col;  // pivot column of row r, r < rank
  std::size_t rank = 0;
};

// Forward elimination, fraction-free (one-step Bareiss): the row update
// (p*u[i][j] - u[i][c]*u[r][j]) / prev stays exact over any integral domain
// and keeps intermediate entries small over Q(i). Pivot: first row with a
// nonzero entry in the current column.
template <typename T>
Echelon<T> echelon(Matrix<T> m) {
  Echelon<T> e;
  std::size_t r = 0;
  T prev(1);
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == T()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T piv = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = (piv * m(i, j) - f * m(r, j)) / prev;
    }
    prev = piv;
    e.pivot_col.push_back(c);
    ++r;
  }
  e.rank = r;
  e.u = std::move(m);
  return e;
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  return echelon(m).rank;
}

// Basis of the null space; one vector per free column, free variable set to 1.
template <typename T>
std::vector<std::vector<T>> kernel(const Matrix<T>& m) {
  Echelon<T> e = echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_col) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols());
    v[f] = T(1);
    for (std::size_t k = e.rank; k-- > 0;) {
      std::size_t p = e.pivot_col[k];
      T s{};
      for (std::size_t j = p + 1; j < m.cols(); ++j)
        if (!(v[j] == T())) s += e.u(k, j) * v[j];
      v[p] = -s / e.u(k, p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Exact solve m*x = rhs. Free variables are set to zero; throws Inconsistent
// when no solution exists.
template <typename T>
std::vector<T> solve_linear(const Matrix<T>& m, const std::vector<T>& rhs) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  Echelon<T> e = echelon(aug);
  if (e.rank > 0 && e.pivot_col[e.rank - 1] == m.cols()) throw Inconsistent();
  std::vector<T> v(m.cols());
  for (std::size_t k = e.rank; k-- > 0;) {
    std::size_t p = e.pivot_col[k];
    T s{};
    for (std::size_t j = p + 1; j < m.cols(); ++j)
      if (!(v[j] == T())) s += e.u(k, j) * v[j];
    v[p] = (e.u(k, m.cols()) - s) / e.u(k, p);
  }
  return v;
}

// Monic characteristic polynomial coefficients, lowest degree first,
// by Faddeev-LeVerrier.
template <typename T>
std::vector<T> char_poly_coeffs(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw NonSquare();
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1);
  c[n] = T(1);
  Matrix<T> m = Matrix<T>(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- a*(m + c_{n-k+1}*I)
    Matrix<T> t = m;
    for (std::size_t i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
    m = a * t;
    c[n - k] = -(m.trace() / T(long(k)));
  }
  return c;
}

// Real-linear maps on C^n, viewed over Q^{2n}: used for the fixed-point
// subspaces of conjugate-linear involutions (tau-lambda real forms).
// Returns the Q-dimension of ker(f - id).
inline std::size_t fixed_subspace_dim_q(
    std::size_t n,
    const std::function<std::vector<GaussRat>(const std::vector<GaussRat>&)>& f) {
  Matrix<GaussRat> m(2 * n, 2 * n);  // entries stay real
  for (std::size_t k = 0; k < 2 * n; ++k) {
    std::vector<GaussRat> v(n);
    if (k < n)
      v[k] = GaussRat(1);
    else
      v[k - n] = GaussRat::i();
    std::vector<GaussRat> w = f(v);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, k) = GaussRat(w[i].re);
      m(n + i, k) = GaussRat(w[i].im);
    }
    m(k, k) -= GaussRat(1);
  }
  return 2 * n - rank(m);
}

// Q-rank of a family of vectors in C^n (realified), for real-independence
// checks of rational bases inside real forms.
inline std::size_t rank_over_q(const std::vector<std::vector<GaussRat>>& vecs) {
  if (vecs.empty()) return 0;
  std::size_t n = vecs[0].size();
  Matrix<GaussRat> m(vecs.size(), 2 * n);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = GaussRat(vecs[i][j].re);
      m(i, n + j) = GaussRat(vecs[i][j].im);
    }
  return rank(m);
}

}  // namespace exla
