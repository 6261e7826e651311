#pragma once

#include <array>
#include <vector>

#include "exla/errors.hpp"
#include "exla/f4e6.hpp"
#include "exla/jordan.hpp"

namespace exla {

// Element of (P_R)^C = J + J + C + C, 14 coordinates in the order
// (X: E1..F3, Y: E1..F3, xi, eta).
struct FreudElem {
  JordanElem x, y;
  GaussRat xi, eta;

  static FreudElem dot1() {  // (0,0,1,0)
    FreudElem p;
    p.xi = GaussRat(1);
    return p;
  }
  static FreudElem underdot1() {  // (0,0,0,1)
    FreudElem p;
    p.eta = GaussRat(1);
    return p;
  }
  static FreudElem from_x(JordanElem v) {
    FreudElem p;
    p.x = std::move(v);
    return p;
  }
  static FreudElem from_y(JordanElem v) {
    FreudElem p;
    p.y = std::move(v);
    return p;
  }
  static FreudElem basis(int k) {  // k in 0..13
    std::array<GaussRat, 14> c{};
    c[k] = GaussRat(1);
    return from_coords(c);
  }

  std::array<GaussRat, 14> coords() const {
    std::array<GaussRat, 14> c{};
    auto cx = x.coords(), cy = y.coords();
    for (int i = 0; i < 6; ++i) {
      c[i] = cx[i];
      c[6 + i] = cy[i];
    }
    c[12] = xi;
    c[13] = eta;
    return c;
  }
  static FreudElem from_coords(const std::array<GaussRat, 14>& c) {
    FreudElem p;
    std::array<GaussRat, 6> cx, cy;
    for (int i = 0; i < 6; ++i) {
      cx[i] = c[i];
      cy[i] = c[6 + i];
    }
    p.x = JordanElem::from_coords(cx);
    p.y = JordanElem::from_coords(cy);
    p.xi = c[12];
    p.eta = c[13];
    return p;
  }

  bool is_zero() const { return x.is_zero() && y.is_zero() && xi.is_zero() && eta.is_zero(); }

  friend FreudElem operator+(FreudElem a, const FreudElem& b) {
    a.x += b.x;
    a.y += b.y;
    a.xi += b.xi;
    a.eta += b.eta;
    return a;
  }
  friend FreudElem operator-(FreudElem a, const FreudElem& b) {
    a.x -= b.x;
    a.y -= b.y;
    a.xi -= b.xi;
    a.eta -= b.eta;
    return a;
  }
  friend FreudElem operator*(const GaussRat& s, FreudElem a) {
    a.x = s * a.x;
    a.y = s * a.y;
    a.xi *= s;
    a.eta *= s;
    return a;
  }
  FreudElem operator-() const { return GaussRat(-1) * (*this); }
  friend bool operator==(const FreudElem& a, const FreudElem& b) {
    return a.x == b.x && a.y == b.y && a.xi == b.xi && a.eta == b.eta;
  }
  friend bool operator!=(const FreudElem& a, const FreudElem& b) { return !(a == b); }
};

// {P, Q} = (X, W) - (Y, Z) + xi*omega - eta*zeta
inline GaussRat skew_inner(const FreudElem& p, const FreudElem& q) {
  return inner(p.x, q.y) - inner(p.y, q.x) + p.xi * q.eta - p.eta * q.xi;
}

// lambda(X, Y, xi, eta) = (Y, -X, eta, -xi)
inline FreudElem lambda_map(const FreudElem& p) {
  FreudElem r;
  r.x = p.y;
  r.y = -p.x;
  r.xi = p.eta;
  r.eta = -p.xi;
  return r;
}

inline FreudElem tau_freud(const FreudElem& p) {
  FreudElem r;
  r.x = tau(p.x);
  r.y = tau(p.y);
  r.xi = p.xi.conj();
  r.eta = p.eta.conj();
  return r;
}

// Phi(phi, A, B, nu), 21 coordinates (phi: 8, A: 6, B: 6, nu).
struct E7Elem {
  E6Elem phi;
  JordanElem a, b;
  GaussRat nu;

  static E7Elem from_phi(E6Elem p) {
    E7Elem e;
    e.phi = std::move(p);
    return e;
  }
  static E7Elem from_a(JordanElem v) {
    E7Elem e;
    e.a = std::move(v);
    return e;
  }
  static E7Elem from_b(JordanElem v) {
    E7Elem e;
    e.b = std::move(v);
    return e;
  }
  static E7Elem from_nu(GaussRat v) {
    E7Elem e;
    e.nu = std::move(v);
    return e;
  }
  static E7Elem basis(int k) {  // k in 0..20
    std::array<GaussRat, 21> c{};
    c[k] = GaussRat(1);
    return from_coords(c);
  }

  std::array<GaussRat, 21> coords() const {
    std::array<GaussRat, 21> c{};
    auto cp = phi.coords();
    auto ca = a.coords(), cb = b.coords();
    for (int i = 0; i < 8; ++i) c[i] = cp[i];
    for (int i = 0; i < 6; ++i) {
      c[8 + i] = ca[i];
      c[14 + i] = cb[i];
    }
    c[20] = nu;
    return c;
  }
  static E7Elem from_coords(const std::array<GaussRat, 21>& c) {
    E7Elem e;
    std::array<GaussRat, 8> cp;
    std::array<GaussRat, 6> ca, cb;
    for (int i = 0; i < 8; ++i) cp[i] = c[i];
    for (int i = 0; i < 6; ++i) {
      ca[i] = c[8 + i];
      cb[i] = c[14 + i];
    }
    e.phi = E6Elem::from_coords(cp);
    e.a = JordanElem::from_coords(ca);
    e.b = JordanElem::from_coords(cb);
    e.nu = c[20];
    return e;
  }

  bool is_zero() const {
    return phi.is_zero() && a.is_zero() && b.is_zero() && nu.is_zero();
  }

  friend E7Elem operator+(E7Elem x, const E7Elem& y) {
    x.phi = x.phi + y.phi;
    x.a += y.a;
    x.b += y.b;
    x.nu += y.nu;
    return x;
  }
  friend E7Elem operator-(E7Elem x, const E7Elem& y) {
    x.phi = x.phi - y.phi;
    x.a -= y.a;
    x.b -= y.b;
    x.nu -= y.nu;
    return x;
  }
  friend E7Elem operator*(const GaussRat& s, E7Elem x) {
    x.phi = s * x.phi;
    x.a = s * x.a;
    x.b = s * x.b;
    x.nu *= s;
    return x;
  }
  E7Elem operator-() const { return GaussRat(-1) * (*this); }
  friend bool operator==(const E7Elem& x, const E7Elem& y) {
    return x.phi == y.phi && x.a == y.a && x.b == y.b && x.nu == y.nu;
  }
  friend bool operator!=(const E7Elem& x, const E7Elem& y) { return !(x == y); }
};

// Phi(phi,A,B,nu)(X,Y,xi,eta) =
//   (phi X - (1/3)nu X + 2 B x Y + eta A,
//    2 A x X - tphi Y + (1/3)nu Y + xi B,
//    (A, Y) + nu xi,
//    (B, X) - nu eta)
inline FreudElem phi_action(const E7Elem& f, const FreudElem& p) {
  static const GaussRat third(Rat(1, 3));
  if (f.is_zero() || p.is_zero()) return FreudElem{};
  JordanOperator op = f.phi.to_operator();
  JordanOperator top = e6_transpose_operator(f.phi);
  FreudElem r;
  JordanElem bxy = cross(f.b, p.y), axx = cross(f.a, p.x);
  r.x = op.apply(p.x) - (third * f.nu) * p.x + (bxy + bxy) + p.eta * f.a;
  r.y = (axx + axx) - top.apply(p.y) + (third * f.nu) * p.y + p.xi * f.b;
  r.xi = inner(f.a, p.y) + f.nu * p.xi;
  r.eta = inner(f.b, p.x) - f.nu * p.eta;
  return r;
}

inline const std::vector<Matrix<GaussRat>>& e7_basis_matrices() {
  static const std::vector<Matrix<GaussRat>> mats = [] {
    std::vector<Matrix<GaussRat>> v;
    for (int k = 0; k < 21; ++k) {
      E7Elem e = E7Elem::basis(k);
      Matrix<GaussRat> m(14, 14);
      for (int j = 0; j < 14; ++j) {
        auto col = phi_action(e, FreudElem::basis(j)).coords();
        for (int i = 0; i < 14; ++i) m(i, j) = col[i];
      }
      v.push_back(std::move(m));
    }
    return v;
  }();
  return mats;
}

// The action is linear in (phi, A, B, nu); assemble from the cached basis.
inline Matrix<GaussRat> e7_to_matrix(const E7Elem& f) {
  auto c = f.coords();
  Matrix<GaussRat> m(14, 14);
  for (int k = 0; k < 21; ++k)
    if (!c[k].is_zero()) m += c[k] * e7_basis_matrices()[k];
  return m;
}

// Reads (phi, A, B, nu) back off a 14x14 operator: A and nu from the image of
// underdot-1, B from the image of dot-1, phi columnwise from the X block.
// Rebuild failure means the operator left the 21-dimensional span.
inline E7Elem e7_from_operator(const Matrix<GaussRat>& m) {
  if (m.rows() != 14 || m.cols() != 14) throw NonSquare();
  static const GaussRat third(Rat(1, 3));
  E7Elem e;
  FreudElem u1 = FreudElem::from_coords([&] {
    std::array<GaussRat, 14> c{};
    for (int i = 0; i < 14; ++i) c[i] = m(i, 13);
    return c;
  }());
  e.a = u1.x;
  e.nu = -u1.eta;
  std::array<GaussRat, 6> cb;
  for (int i = 0; i < 6; ++i) cb[i] = m(6 + i, 12);
  e.b = JordanElem::from_coords(cb);
  Matrix<GaussRat> phimat(6, 6);
  for (int j = 0; j < 6; ++j) {
    for (int i = 0; i < 6; ++i) phimat(i, j) = m(i, j);
    phimat(j, j) += third * e.nu;
  }
  try {
    e.phi = e6_decompose(JordanOperator{phimat});
  } catch (const NotInE6&) {
    throw NotInE7();
  }
  if (e7_to_matrix(e) != m) throw NotInE7();
  return e;
}

// P x Q as an e7 element (the Freudenthal cross operation).
inline E7Elem p_cross_q(const FreudElem& p, const FreudElem& q) {
  static const GaussRat quarter(Rat(1, 4)), eighth(Rat(1, 8));
  if (p.is_zero() || q.is_zero()) return E7Elem{};
  E7Elem e;
  JordanOperator phi_op = vee(p.x, q.y) + vee(q.x, p.y);
  e.phi = e6_decompose(GaussRat(Rat(-1, 2)) * phi_op);
  JordanElem yw = cross(p.y, q.y);
  e.a = -quarter * ((yw + yw) - p.xi * q.x - q.xi * p.x);
  JordanElem xz = cross(p.x, q.x);
  e.b = quarter * ((xz + xz) - p.eta * q.y - q.eta * p.y);
  e.nu = eighth * (inner(p.x, q.y) + inner(q.x, p.y) -
                   GaussRat(3) * (p.xi * q.eta + q.xi * p.eta));
  return e;
}

// Bracket by operator commutator, re-expressed exactly in (phi,A,B,nu).
inline E7Elem e7_bracket(const E7Elem& f, const E7Elem& g) {
  if (f.is_zero() || g.is_zero()) return E7Elem{};
  Matrix<GaussRat> mf = e7_to_matrix(f), mg = e7_to_matrix(g);
  return e7_from_operator(mf * mg - mg * mf);
}

// (Phi1, Phi2)_7 = -2(phi1,phi2)_6 - 4(A1,B2) - 4(A2,B1) - (8/3) nu1 nu2
inline GaussRat e7_inner(const E7Elem& f, const E7Elem& g) {
  return GaussRat(-2) * e6_inner(f.phi, g.phi) - GaussRat(4) * inner(f.a, g.b) -
         GaussRat(4) * inner(g.a, f.b) - GaussRat(Rat(8, 3)) * f.nu * g.nu;
}

namespace detail {
inline Matrix<GaussRat> e7_ad(const E7Elem& f) {
  Matrix<GaussRat> m(21, 21);
  for (int j = 0; j < 21; ++j) {
    auto col = e7_bracket(f, E7Elem::basis(j)).coords();
    for (int i = 0; i < 21; ++i) m(i, j) = col[i];
  }
  return m;
}
}  // namespace detail

inline GaussRat e7_killing(const E7Elem& f, const E7Elem& g) {
  GaussRat ad = (detail::e7_ad(f) * detail::e7_ad(g)).trace();
  GaussRat via_inner = GaussRat(-2) * e7_inner(f, g);
  GaussRat via_op = GaussRat(Rat(8, 5)) * (e7_to_matrix(f) * e7_to_matrix(g)).trace();
  if (ad != via_inner || ad != via_op)
    throw InternalMismatch("e7 killing form routes disagree");
  return ad;
}

// Membership in (M_R)^C: P x P = 0 and P != 0, unfolded into the four
// component conditions and cross-checked against the assembled operator.
inline bool in_m(const FreudElem& p) {
  if (p.is_zero()) return false;
  bool conds = vee(p.x, p.y).is_zero() && cross(p.x, p.x) == p.eta * p.y &&
               cross(p.y, p.y) == p.xi * p.x && inner(p.x, p.y) == GaussRat(3) * p.xi * p.eta;
  bool op_zero = p_cross_q(p, p).is_zero();
  if (conds != op_zero) throw InternalMismatch("M membership conditions vs P x P");
  return conds;
}

// Exact exp of a nilpotent operator; the power check certifies nilpotency.
inline Matrix<GaussRat> exp_nilpotent(const Matrix<GaussRat>& m) {
  if (m.rows() != m.cols()) throw NonSquare();
  const std::size_t n = m.rows();
  Matrix<GaussRat> total = Matrix<GaussRat>::identity(n);
  Matrix<GaussRat> pw = m;
  Rat fact(1);
  std::size_t k = 1;
  while (!pw.is_zero()) {
    if (k > n) throw NotNilpotent();
    total += GaussRat(Rat(1) / fact) * pw;
    pw = pw * m;
    ++k;
    fact *= Rat(long(k));
  }
  return total;
}

inline Matrix<GaussRat> exp_nilpotent(const E7Elem& f) { return exp_nilpotent(e7_to_matrix(f)); }

// lambda Phi lambda^{-1}, computed on the 14x14 realization.
inline E7Elem lambda_star_e7(const E7Elem& f) {
  Matrix<GaussRat> l(14, 14);
  for (int j = 0; j < 14; ++j) {
    auto col = lambda_map(FreudElem::basis(j)).coords();
    for (int i = 0; i < 14; ++i) l(i, j) = col[i];
  }
  return e7_from_operator(l * e7_to_matrix(f) * (-l));  // lambda^{-1} = -lambda
}

inline E7Elem tau_e7(const E7Elem& f) {
  auto c = f.coords();
  for (auto& v : c) v = v.conj();
  return E7Elem::from_coords(c);
}

inline bool tau_lambda_fixed_e7(const E7Elem& f) { return tau_e7(lambda_star_e7(f)) == f; }

}  // namespace exla
