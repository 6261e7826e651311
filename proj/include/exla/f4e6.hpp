#pragma once

#include <array>
#include <vector>

#include "exla/errors.hpp"
#include "exla/jordan.hpp"

namespace exla {

// Derivation algebra of J(3,R)^C: every element is c1*A~1(1) + c2*A~2(1) + c3*A~3(1).
struct F4Elem {
  std::array<GaussRat, 3> c{};

  static F4Elem basis(int i) {  // i in 1..3
    F4Elem e;
    e.c[i - 1] = GaussRat(1);
    return e;
  }

  JordanOperator to_operator() const {
    JordanOperator op;
    for (int i = 0; i < 3; ++i) op = op + a_tilde(i + 1, c[i]);
    return op;
  }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  friend F4Elem operator+(F4Elem a, const F4Elem& b) {
    for (int i = 0; i < 3; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend F4Elem operator-(F4Elem a, const F4Elem& b) {
    for (int i = 0; i < 3; ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend F4Elem operator*(const GaussRat& s, F4Elem a) {
    for (int i = 0; i < 3; ++i) a.c[i] *= s;
    return a;
  }
  F4Elem operator-() const { return GaussRat(-1) * (*this); }
  friend bool operator==(const F4Elem& a, const F4Elem& b) { return a.c == b.c; }
  friend bool operator!=(const F4Elem& a, const F4Elem& b) { return !(a == b); }
};

// [A~i(a), A~i(b)] = 0 and [A~i(a), A~{i+1}(b)] = -(1/2) A~{i+2}(ab): bilinear
// extension is -(1/2) of the 3-vector cross product of the coefficients.
inline F4Elem f4_bracket(const F4Elem& a, const F4Elem& b) {
  const GaussRat mhalf(Rat(-1, 2));
  F4Elem r;
  r.c[0] = mhalf * (a.c[1] * b.c[2] - a.c[2] * b.c[1]);
  r.c[1] = mhalf * (a.c[2] * b.c[0] - a.c[0] * b.c[2]);
  r.c[2] = mhalf * (a.c[0] * b.c[1] - a.c[1] * b.c[0]);
  return r;
}

// (d1, d2)_4 = -2 sum c_i c_i'; normalized so that (A~1(1), A~1(1))_4 = -2.
inline GaussRat f4_inner(const F4Elem& a, const F4Elem& b) {
  GaussRat s;
  for (int i = 0; i < 3; ++i) s += a.c[i] * b.c[i];
  return GaussRat(-2) * s;
}

namespace detail {
inline Matrix<GaussRat> f4_ad(const F4Elem& a) {
  Matrix<GaussRat> m(3, 3);
  for (int j = 0; j < 3; ++j) {
    F4Elem col = f4_bracket(a, F4Elem::basis(j + 1));
    for (int i = 0; i < 3; ++i) m(i, j) = col.c[i];
  }
  return m;
}
}  // namespace detail

// Killing form, computed three independent ways; disagreement means a bug.
inline GaussRat f4_killing(const F4Elem& a, const F4Elem& b) {
  GaussRat ad = (detail::f4_ad(a) * detail::f4_ad(b)).trace();
  GaussRat via_inner = GaussRat(Rat(1, 4)) * f4_inner(a, b);
  GaussRat via_op =
      GaussRat(Rat(1, 5)) * (a.to_operator().m * b.to_operator().m).trace();
  if (ad != via_inner || ad != via_op)
    throw InternalMismatch("f4 killing form routes disagree");
  return ad;
}

// The group map f4C(A) X = A X tA for orthogonal A.
inline JordanOperator f4c_group_map(const Mat3& a) {
  if (a.rows() != 3 || a.cols() != 3) throw NonSquare();
  if (a * a.transpose() != Mat3::identity(3)) throw NotOrthogonal();
  return JordanOperator::from_action([&](const JordanElem& v) {
    return JordanElem::from_matrix(a * v.to_matrix() * a.transpose());
  });
}

// Differential: a skew 3x3 matrix D = A1(a)+A2(b)+A3(c) maps to
// 2(A~1(a)+A~2(b)+A~3(c)), i.e. to the operator X -> DX + X tD.
inline F4Elem f4cstar(const Mat3& d) {
  if (d.rows() != 3 || d.cols() != 3) throw NonSquare();
  if (d.transpose() != -d) throw NotSkew();
  F4Elem r;
  r.c[0] = GaussRat(2) * d(1, 2);
  r.c[1] = GaussRat(2) * d(2, 0);
  r.c[2] = GaussRat(2) * d(0, 1);
  return r;
}

// phi = delta + T~, T traceless; coordinates (c1,c2,c3 | t on the traceless
// basis E1-E2, E2-E3, F1(1), F2(1), F3(1)).
struct E6Elem {
  F4Elem delta;
  std::array<GaussRat, 5> t{};

  static E6Elem basis(int k) {  // k in 0..7
    E6Elem e;
    if (k < 3)
      e.delta = F4Elem::basis(k + 1);
    else
      e.t[k - 3] = GaussRat(1);
    return e;
  }

  JordanElem t_elem() const {
    JordanElem v;
    v.xi[0] = t[0];
    v.xi[1] = t[1] - t[0];
    v.xi[2] = -t[1];
    v.x = {t[2], t[3], t[4]};
    return v;
  }

  JordanOperator to_operator() const;  // linear in the coordinates, cached basis

  std::array<GaussRat, 8> coords() const {
    return {delta.c[0], delta.c[1], delta.c[2], t[0], t[1], t[2], t[3], t[4]};
  }
  static E6Elem from_coords(const std::array<GaussRat, 8>& c) {
    E6Elem e;
    e.delta.c = {c[0], c[1], c[2]};
    e.t = {c[3], c[4], c[5], c[6], c[7]};
    return e;
  }

  bool is_zero() const {
    for (const auto& v : coords())
      if (!v.is_zero()) return false;
    return true;
  }

  friend E6Elem operator+(E6Elem a, const E6Elem& b) {
    a.delta = a.delta + b.delta;
    for (int i = 0; i < 5; ++i) a.t[i] += b.t[i];
    return a;
  }
  friend E6Elem operator-(E6Elem a, const E6Elem& b) {
    a.delta = a.delta - b.delta;
    for (int i = 0; i < 5; ++i) a.t[i] -= b.t[i];
    return a;
  }
  friend E6Elem operator*(const GaussRat& s, E6Elem a) {
    a.delta = s * a.delta;
    for (int i = 0; i < 5; ++i) a.t[i] *= s;
    return a;
  }
  E6Elem operator-() const { return GaussRat(-1) * (*this); }
  friend bool operator==(const E6Elem& a, const E6Elem& b) {
    return a.delta == b.delta && a.t == b.t;
  }
  friend bool operator!=(const E6Elem& a, const E6Elem& b) { return !(a == b); }
};

// The operator realizations of the 8 basis elements (and their transposes)
// are fixed; everything downstream assembles linear combinations of these.
inline const std::array<JordanOperator, 8>& e6_basis_ops() {
  static const std::array<JordanOperator, 8> ops = [] {
    std::array<JordanOperator, 8> v;
    for (int k = 0; k < 8; ++k) {
      E6Elem e = E6Elem::basis(k);
      v[k] = e.delta.to_operator() + t_tilde(e.t_elem());
    }
    return v;
  }();
  return ops;
}

inline const std::array<JordanOperator, 8>& e6_basis_ops_transposed() {
  static const std::array<JordanOperator, 8> ops = [] {
    std::array<JordanOperator, 8> v;
    for (int k = 0; k < 8; ++k) v[k] = transpose_op(e6_basis_ops()[k]);
    return v;
  }();
  return ops;
}

inline JordanOperator E6Elem::to_operator() const {
  auto c = coords();
  JordanOperator op;
  for (int k = 0; k < 8; ++k)
    if (!c[k].is_zero()) op = op + c[k] * e6_basis_ops()[k];
  return op;
}

// t(phi) assembled from the cached transposed basis operators.
inline JordanOperator e6_transpose_operator(const E6Elem& phi) {
  auto c = phi.coords();
  JordanOperator op;
  for (int k = 0; k < 8; ++k)
    if (!c[k].is_zero()) op = op + c[k] * e6_basis_ops_transposed()[k];
  return op;
}

inline E6Elem e6_from_parts(const F4Elem& delta, const JordanElem& t0) {
  if (!t0.tr().is_zero()) throw NotTraceless();
  E6Elem e;
  e.delta = delta;
  e.t = {t0.xi[0], -t0.xi[2], t0.x[0], t0.x[1], t0.x[2]};
  return e;
}

// Splits a 6x6 operator as delta + T~ (T = op E, delta = op - T~) and reads
// the A~ coefficients off the delta action on E1, E2. Any residual after
// reassembly means the operator was not in the 8-dimensional span.
inline E6Elem e6_decompose(const JordanOperator& op) {
  JordanElem t = op.apply(JordanElem::unit());
  if (!t.tr().is_zero()) throw NotInE6();
  JordanOperator d = op - t_tilde(t);
  // delta E1 = (1/2)F2(c2) - (1/2)F3(c3), delta E2 = -(1/2)F1(c1) + (1/2)F3(c3)
  JordanElem d1 = d.apply(JordanElem::E(1)), d2 = d.apply(JordanElem::E(2));
  F4Elem delta;
  delta.c[0] = GaussRat(-2) * d2.x[0];
  delta.c[1] = GaussRat(2) * d1.x[1];
  delta.c[2] = GaussRat(-2) * d1.x[2];
  E6Elem e = e6_from_parts(delta, t);
  if (e.to_operator() != op) throw NotInE6();
  return e;
}

// One code path for the bracket: operator commutator, then exact projection.
inline E6Elem e6_bracket(const E6Elem& a, const E6Elem& b) {
  return e6_decompose(commutator(a.to_operator(), b.to_operator()));
}

// f6C*(S) X = S X + X tS for traceless S.
inline E6Elem f6cstar(const Mat3& s) {
  if (s.rows() != 3 || s.cols() != 3) throw NonSquare();
  if (!s.trace().is_zero()) throw NotTraceless();
  JordanOperator op = JordanOperator::from_action([&](const JordanElem& v) {
    Mat3 x = v.to_matrix();
    return JordanElem::from_matrix(s * x + x * s.transpose());
  });
  return e6_decompose(op);
}

inline GaussRat e6_inner(const E6Elem& a, const E6Elem& b) {
  return f4_inner(a.delta, b.delta) + inner(a.t_elem(), b.t_elem());
}

namespace detail {
inline Matrix<GaussRat> e6_ad(const E6Elem& a) {
  Matrix<GaussRat> m(8, 8);
  for (int j = 0; j < 8; ++j) {
    auto col = e6_bracket(a, E6Elem::basis(j)).coords();
    for (int i = 0; i < 8; ++i) m(i, j) = col[i];
  }
  return m;
}
}  // namespace detail

inline GaussRat e6_killing(const E6Elem& a, const E6Elem& b) {
  GaussRat ad = (detail::e6_ad(a) * detail::e6_ad(b)).trace();
  GaussRat via_inner = GaussRat(Rat(3, 2)) * e6_inner(a, b);
  GaussRat via_op =
      GaussRat(Rat(6, 5)) * (a.to_operator().m * b.to_operator().m).trace();
  if (ad != via_inner || ad != via_op)
    throw InternalMismatch("e6 killing form routes disagree");
  return ad;
}

// lambda at the algebra level: phi -> -t(phi), through the Gram conjugation.
inline E6Elem lambda_e6(const E6Elem& phi) {
  return e6_decompose(-transpose_op(phi.to_operator()));
}

inline E6Elem tau_e6(const E6Elem& phi) {
  auto c = phi.coords();
  for (auto& v : c) v = v.conj();
  return E6Elem::from_coords(c);
}

// (tau-fixed, tau-lambda-fixed)
inline std::pair<bool, bool> tau_fixed_check(const E6Elem& phi) {
  bool tau_fixed = true;
  for (const auto& v : phi.coords())
    if (!v.is_real()) tau_fixed = false;
  bool tl_fixed = tau_e6(lambda_e6(phi)) == phi;
  return {tau_fixed, tl_fixed};
}

}  // namespace exla
