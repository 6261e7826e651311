#pragma once

#include <array>
#include <functional>
#include <ostream>

#include "exla/errors.hpp"
#include "exla/matrix.hpp"
#include "exla/rational.hpp"

namespace exla {

using Mat3 = Matrix<GaussRat>;

// Element of J(3,R)^C: a complex symmetric 3x3 matrix stored as 6 coordinates
// in the fixed basis order (E1, E2, E3, F1(1), F2(1), F3(1)). F_i(x) carries x
// at the two off-diagonal slots avoiding row/column i.
struct JordanElem {
  std::array<GaussRat, 3> xi{};  // diagonal
  std::array<GaussRat, 3> x{};   // off-diagonal F_i coordinates

  static JordanElem unit() {
    JordanElem e;
    e.xi = {GaussRat(1), GaussRat(1), GaussRat(1)};
    return e;
  }
  static JordanElem E(int i) {  // i in 1..3
    JordanElem e;
    e.xi[i - 1] = GaussRat(1);
    return e;
  }
  static JordanElem F(int i, GaussRat c) {  // i in 1..3
    JordanElem e;
    e.x[i - 1] = std::move(c);
    return e;
  }

  std::array<GaussRat, 6> coords() const {
    return {xi[0], xi[1], xi[2], x[0], x[1], x[2]};
  }
  static JordanElem from_coords(const std::array<GaussRat, 6>& c) {
    JordanElem e;
    e.xi = {c[0], c[1], c[2]};
    e.x = {c[3], c[4], c[5]};
    return e;
  }

  Mat3 to_matrix() const {
    Mat3 m(3, 3);
    m(0, 0) = xi[0];
    m(1, 1) = xi[1];
    m(2, 2) = xi[2];
    m(1, 2) = m(2, 1) = x[0];
    m(0, 2) = m(2, 0) = x[1];
    m(0, 1) = m(1, 0) = x[2];
    return m;
  }
  static JordanElem from_matrix(const Mat3& m) {
    if (m != m.transpose()) throw Error("jordan element from non-symmetric matrix");
    JordanElem e;
    e.xi = {m(0, 0), m(1, 1), m(2, 2)};
    e.x = {m(1, 2), m(0, 2), m(0, 1)};
    return e;
  }

  GaussRat tr() const { return xi[0] + xi[1] + xi[2]; }
  bool is_zero() const {
    for (int i = 0; i < 3; ++i)
      if (!xi[i].is_zero() || !x[i].is_zero()) return false;
    return true;
  }

  JordanElem& operator+=(const JordanElem& o) {
    for (int i = 0; i < 3; ++i) {
      xi[i] += o.xi[i];
      x[i] += o.x[i];
    }
    return *this;
  }
  JordanElem& operator-=(const JordanElem& o) {
    for (int i = 0; i < 3; ++i) {
      xi[i] -= o.xi[i];
      x[i] -= o.x[i];
    }
    return *this;
  }
  friend JordanElem operator+(JordanElem a, const JordanElem& b) { return a += b; }
  friend JordanElem operator-(JordanElem a, const JordanElem& b) { return a -= b; }
  friend JordanElem operator*(const GaussRat& s, JordanElem a) {
    for (int i = 0; i < 3; ++i) {
      a.xi[i] *= s;
      a.x[i] *= s;
    }
    return a;
  }
  JordanElem operator-() const { return GaussRat(-1) * (*this); }
  friend bool operator==(const JordanElem& a, const JordanElem& b) {
    return a.xi == b.xi && a.x == b.x;
  }
  friend bool operator!=(const JordanElem& a, const JordanElem& b) { return !(a == b); }
};

// Products go through the 3x3 matrix embedding; no hand-derived coordinate
// tables anywhere.
inline JordanElem jordan_mul(const JordanElem& a, const JordanElem& b) {
  Mat3 ma = a.to_matrix(), mb = b.to_matrix();
  Mat3 m = ma * mb + mb * ma;
  return JordanElem::from_matrix(GaussRat(Rat(1, 2)) * m);
}

inline GaussRat inner(const JordanElem& a, const JordanElem& b) {
  return jordan_mul(a, b).tr();
}

// Freudenthal cross: X x Y = (1/2)(2 XoY - tr(X)Y - tr(Y)X + (tr X tr Y - (X,Y)) E)
inline JordanElem cross(const JordanElem& a, const JordanElem& b) {
  JordanElem m = jordan_mul(a, b);
  GaussRat ta = a.tr(), tb = b.tr();
  JordanElem r = m + m - ta * b - tb * a + (ta * tb - inner(a, b)) * JordanElem::unit();
  return GaussRat(Rat(1, 2)) * r;
}

inline GaussRat trilinear(const JordanElem& a, const JordanElem& b, const JordanElem& c) {
  return inner(a, cross(b, c));
}

inline GaussRat det(const JordanElem& a) {
  return GaussRat(Rat(1, 3)) * trilinear(a, a, a);
}

inline JordanElem tau(const JordanElem& a) {
  JordanElem r;
  for (int i = 0; i < 3; ++i) {
    r.xi[i] = a.xi[i].conj();
    r.x[i] = a.x[i].conj();
  }
  return r;
}

// C-linear operator on J(3,R)^C in the fixed 6-coordinate basis.
struct JordanOperator {
  Matrix<GaussRat> m{6, 6};

  static JordanOperator identity() { return {Matrix<GaussRat>::identity(6)}; }
  static JordanOperator from_action(const std::function<JordanElem(const JordanElem&)>& f) {
    JordanOperator op;
    for (int j = 0; j < 6; ++j) {
      std::array<GaussRat, 6> basis{};
      basis[j] = GaussRat(1);
      auto img = f(JordanElem::from_coords(basis)).coords();
      for (int i = 0; i < 6; ++i) op.m(i, j) = img[i];
    }
    return op;
  }

  JordanElem apply(const JordanElem& v) const {
    auto c = v.coords();
    std::array<GaussRat, 6> out{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) out[i] += m(i, j) * c[j];
    return JordanElem::from_coords(out);
  }

  friend JordanOperator operator*(const JordanOperator& a, const JordanOperator& b) {
    return {a.m * b.m};
  }
  friend JordanOperator operator+(const JordanOperator& a, const JordanOperator& b) {
    return {a.m + b.m};
  }
  friend JordanOperator operator-(const JordanOperator& a, const JordanOperator& b) {
    return {a.m - b.m};
  }
  friend JordanOperator operator*(const GaussRat& s, const JordanOperator& a) {
    return {s * a.m};
  }
  JordanOperator operator-() const { return {-m}; }
  friend bool operator==(const JordanOperator& a, const JordanOperator& b) { return a.m == b.m; }
  friend bool operator!=(const JordanOperator& a, const JordanOperator& b) { return !(a == b); }
  bool is_zero() const { return m.is_zero(); }
};

inline JordanOperator commutator(const JordanOperator& a, const JordanOperator& b) {
  return {a.m * b.m - b.m * a.m};
}

// A_i(c): the 3x3 skew matrix with c at the cyclic (i+1, i+2) slot.
inline Mat3 a_matrix(int i, const GaussRat& c) {
  Mat3 m(3, 3);
  int p = i % 3, q = (i + 1) % 3;  // 1-based i: rows/cols avoiding i-1
  m(p, q) = c;
  m(q, p) = -c;
  return m;
}

// A~_i(c) X = (1/2)(A_i(c) X - X A_i(c))
inline JordanOperator a_tilde(int i, const GaussRat& c) {
  Mat3 a = a_matrix(i, c);
  return JordanOperator::from_action([&](const JordanElem& v) {
    Mat3 x = v.to_matrix();
    return JordanElem::from_matrix(GaussRat(Rat(1, 2)) * (a * x - x * a));
  });
}

// T~ X = T o X
inline JordanOperator t_tilde(const JordanElem& t) {
  return JordanOperator::from_action([&](const JordanElem& v) { return jordan_mul(t, v); });
}

// X v W = [X~, W~] + (X o W - (1/3)(X,W) E)~
inline JordanOperator vee(const JordanElem& x, const JordanElem& w) {
  JordanElem t = jordan_mul(x, w) - GaussRat(Rat(1, 3)) * inner(x, w) * JordanElem::unit();
  return commutator(t_tilde(x), t_tilde(w)) + t_tilde(t);
}

inline Matrix<GaussRat> jordan_gram() {
  Matrix<GaussRat> g(6, 6);
  for (int i = 0; i < 3; ++i) {
    g(i, i) = GaussRat(1);
    g(3 + i, 3 + i) = GaussRat(2);
  }
  return g;
}

// Transpose with respect to the inner product: G^{-1} m^T G, G the Gram matrix
// diag(1,1,1,2,2,2) of the fixed basis.
inline JordanOperator transpose_op(const JordanOperator& d) {
  static const Matrix<GaussRat> g = jordan_gram();
  Matrix<GaussRat> ginv(6, 6);
  for (int i = 0; i < 6; ++i) ginv(i, i) = GaussRat(1) / g(i, i);
  return {ginv * d.m.transpose() * g};
}

// tau d tau: entrywise conjugation (the basis is real).
inline JordanOperator conj_op(const JordanOperator& d) {
  JordanOperator r;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) r.m(i, j) = d.m(i, j).conj();
  return r;
}

}  // namespace exla
