#pragma once

#include <array>
#include <vector>

#include "exla/errors.hpp"
#include "exla/freudenthal.hpp"

namespace exla {

// Element of (e8_R)^C = e7 + P + P + C + C + C, 52 coordinates in the order
// (Phi: 21, P: 14, Q: 14, r, s, t).
struct E8Elem {
  E7Elem phi;
  FreudElem p, q;
  GaussRat r, s, t;

  static E8Elem one_tilde() {  // (0,0,0,1,0,0)
    E8Elem x;
    x.r = GaussRat(1);
    return x;
  }
  static E8Elem one_upper() {  // (0,0,0,0,1,0)
    E8Elem x;
    x.s = GaussRat(1);
    return x;
  }
  static E8Elem one_lower() {  // (0,0,0,0,0,1)
    E8Elem x;
    x.t = GaussRat(1);
    return x;
  }
  static E8Elem from_phi(E7Elem f) {
    E8Elem x;
    x.phi = std::move(f);
    return x;
  }
  static E8Elem from_p(FreudElem v) {
    E8Elem x;
    x.p = std::move(v);
    return x;
  }
  static E8Elem from_q(FreudElem v) {
    E8Elem x;
    x.q = std::move(v);
    return x;
  }
  static E8Elem basis(int k) {  // k in 0..51
    std::array<GaussRat, 52> c{};
    c[k] = GaussRat(1);
    return from_coords(c);
  }

  std::array<GaussRat, 52> coords() const {
    std::array<GaussRat, 52> c{};
    auto cf = phi.coords();
    auto cp = p.coords(), cq = q.coords();
    for (int i = 0; i < 21; ++i) c[i] = cf[i];
    for (int i = 0; i < 14; ++i) {
      c[21 + i] = cp[i];
      c[35 + i] = cq[i];
    }
    c[49] = r;
    c[50] = s;
    c[51] = t;
    return c;
  }
  static E8Elem from_coords(const std::array<GaussRat, 52>& c) {
    E8Elem x;
    std::array<GaussRat, 21> cf;
    std::array<GaussRat, 14> cp, cq;
    for (int i = 0; i < 21; ++i) cf[i] = c[i];
    for (int i = 0; i < 14; ++i) {
      cp[i] = c[21 + i];
      cq[i] = c[35 + i];
    }
    x.phi = E7Elem::from_coords(cf);
    x.p = FreudElem::from_coords(cp);
    x.q = FreudElem::from_coords(cq);
    x.r = c[49];
    x.s = c[50];
    x.t = c[51];
    return x;
  }

  bool is_zero() const {
    return phi.is_zero() && p.is_zero() && q.is_zero() && r.is_zero() && s.is_zero() &&
           t.is_zero();
  }

  friend E8Elem operator+(E8Elem a, const E8Elem& b) {
    a.phi = a.phi + b.phi;
    a.p = a.p + b.p;
    a.q = a.q + b.q;
    a.r += b.r;
    a.s += b.s;
    a.t += b.t;
    return a;
  }
  friend E8Elem operator-(E8Elem a, const E8Elem& b) {
    a.phi = a.phi - b.phi;
    a.p = a.p - b.p;
    a.q = a.q - b.q;
    a.r -= b.r;
    a.s -= b.s;
    a.t -= b.t;
    return a;
  }
  friend E8Elem operator*(const GaussRat& z, E8Elem a) {
    a.phi = z * a.phi;
    a.p = z * a.p;
    a.q = z * a.q;
    a.r *= z;
    a.s *= z;
    a.t *= z;
    return a;
  }
  E8Elem operator-() const { return GaussRat(-1) * (*this); }
  friend bool operator==(const E8Elem& a, const E8Elem& b) {
    return a.phi == b.phi && a.p == b.p && a.q == b.q && a.r == b.r && a.s == b.s &&
           a.t == b.t;
  }
  friend bool operator!=(const E8Elem& a, const E8Elem& b) { return !(a == b); }
};

// The six-component bracket. No faithful matrix realization exists at this
// size, so Jacobi is a first-class test elsewhere, not a freebie.
inline E8Elem e8_bracket(const E8Elem& x, const E8Elem& y) {
  static const GaussRat eighth(Rat(1, 8)), quarter(Rat(1, 4));
  E8Elem z;
  z.phi = e7_bracket(x.phi, y.phi) + p_cross_q(x.p, y.q) - p_cross_q(y.p, x.q);
  z.p = phi_action(x.phi, y.p) - phi_action(y.phi, x.p) + x.r * y.p - y.r * x.p +
        x.s * y.q - y.s * x.q;
  z.q = phi_action(x.phi, y.q) - phi_action(y.phi, x.q) - x.r * y.q + y.r * x.q +
        x.t * y.p - y.t * x.p;
  z.r = -eighth * skew_inner(x.p, y.q) + eighth * skew_inner(y.p, x.q) + x.s * y.t -
        y.s * x.t;
  z.s = quarter * skew_inner(x.p, y.p) + GaussRat(2) * (x.r * y.s - y.r * x.s);
  z.t = -quarter * skew_inner(x.q, y.q) - GaussRat(2) * (x.r * y.t - y.r * x.t);
  return z;
}

// (R1, R2)_8 = (Phi1,Phi2)_7 - {Q1,P2} + {P1,Q2} - 8 r1 r2 - 4 t1 s2 - 4 s1 t2
inline GaussRat inner8(const E8Elem& x, const E8Elem& y) {
  return e7_inner(x.phi, y.phi) - skew_inner(x.q, y.p) + skew_inner(x.p, y.q) -
         GaussRat(8) * x.r * y.r - GaussRat(4) * x.t * y.s - GaussRat(4) * x.s * y.t;
}

// closed form of the Killing form; the ad-trace route lives in the structure
// constants layer and is checked against this in the verification suites
inline GaussRat killing8(const E8Elem& x, const E8Elem& y) {
  return GaussRat(Rat(-9, 2)) * inner8(x, y);
}

// (R x R) R1 = [R, [R, R1]] - (1/2)(R, R1)_8 R.
// The -(1/2)(,)_8 coefficient is forced by the 52-dimensional normalization
// B_8 = -(9/2)(,)_8; it is the same structural map usually written with
// (1/30)B_8 in the 248-dimensional setting where B_8 = -15(,)_8.
inline E8Elem r_cross_r(const E8Elem& R, const E8Elem& probe) {
  E8Elem nested = e8_bracket(R, e8_bracket(R, probe));
  return nested - (GaussRat(Rat(1, 2)) * inner8(R, probe)) * R;
}

// Conditions (1)-(13) characterizing R x R = 0 for R != 0. (7)-(13) are
// quantified over basis probes Phi1, P1, Q1.
struct WMembership {
  std::array<bool, 13> cond{};
  bool all() const {
    for (bool b : cond)
      if (!b) return false;
    return true;
  }
};

inline WMembership lemma67_check(const E8Elem& R) {
  static const GaussRat half(Rat(1, 2));
  WMembership w;
  const E7Elem& Phi = R.phi;
  const FreudElem &P = R.p, &Q = R.q;
  const GaussRat &r = R.r, &s = R.s, &t = R.t;

  E7Elem pp = p_cross_q(P, P), qq = p_cross_q(Q, Q), pq = p_cross_q(P, Q);
  FreudElem PhiP = phi_action(Phi, P), PhiQ = phi_action(Phi, Q);

  // (1) 2s Phi - P x P = 0
  w.cond[0] = ((s + s) * Phi - pp).is_zero();
  // (2) 2t Phi + Q x Q = 0
  w.cond[1] = ((t + t) * Phi + qq).is_zero();
  // (3) 2r Phi + P x Q = 0
  w.cond[2] = ((r + r) * Phi + pq).is_zero();
  // (4) Phi P - 3r P - 3s Q = 0
  w.cond[3] = (PhiP - GaussRat(3) * (r * P) - GaussRat(3) * (s * Q)).is_zero();
  // (5) Phi Q + 3r Q - 3t P = 0
  w.cond[4] = (PhiQ + GaussRat(3) * (r * Q) - GaussRat(3) * (t * P)).is_zero();
  // (6) {P, Q} - 16(st + r^2) = 0
  w.cond[5] = (skew_inner(P, Q) - GaussRat(16) * (s * t + r * r)).is_zero();

  bool c7 = true, c8 = true, c9 = true, c10 = true;
  for (int k = 0; k < 14; ++k) {
    FreudElem probe = FreudElem::basis(k);
    GaussRat sPp = skew_inner(P, probe), sQp = skew_inner(Q, probe);
    FreudElem Phiprobe = phi_action(Phi, probe);
    // (7) 2(Phi P x Q1 + 2 P x Phi Q1 - r P x Q1 - s Q x Q1) - {P,Q1} Phi = 0
    {
      E7Elem lhs = GaussRat(2) * (p_cross_q(PhiP, probe) +
                                  GaussRat(2) * p_cross_q(P, Phiprobe) -
                                  r * p_cross_q(P, probe) - s * p_cross_q(Q, probe)) -
                   sPp * Phi;
      if (!lhs.is_zero()) c7 = false;
    }
    // (8) 2(Phi Q x P1 + 2 Q x Phi P1 + r Q x P1 - t P x P1) - {Q,P1} Phi = 0
    {
      E7Elem lhs = GaussRat(2) * (p_cross_q(PhiQ, probe) +
                                  GaussRat(2) * p_cross_q(Q, Phiprobe) +
                                  r * p_cross_q(Q, probe) - t * p_cross_q(P, probe)) -
                   sQp * Phi;
      if (!lhs.is_zero()) c8 = false;
    }
    // (9) 8((P x Q1)Q - st Q1 - r^2 Q1 - Phi^2 Q1 + 2r Phi Q1) + 5{P,Q1}Q - 2{Q,Q1}P = 0
    {
      FreudElem lhs =
          GaussRat(8) * (phi_action(p_cross_q(P, probe), Q) - (s * t) * probe -
                         (r * r) * probe - phi_action(Phi, Phiprobe) +
                         (r + r) * Phiprobe) +
          GaussRat(5) * (sPp * Q) - GaussRat(2) * (sQp * P);
      if (!lhs.is_zero()) c9 = false;
    }
    // (10) 8((Q x P1)P + st P1 + r^2 P1 + Phi^2 P1 + 2r Phi P1) + 5{Q,P1}P - 2{P,P1}Q = 0
    {
      FreudElem lhs =
          GaussRat(8) * (phi_action(p_cross_q(Q, probe), P) + (s * t) * probe +
                         (r * r) * probe + phi_action(Phi, Phiprobe) +
                         (r + r) * Phiprobe) +
          GaussRat(5) * (sQp * P) - GaussRat(2) * (sPp * Q);
      if (!lhs.is_zero()) c10 = false;
    }
  }
  w.cond[6] = c7;
  w.cond[7] = c8;
  w.cond[8] = c9;
  w.cond[9] = c10;

  bool c11 = true, c12 = true, c13 = true;
  for (int k = 0; k < 21; ++k) {
    E7Elem probe = E7Elem::basis(k);
    GaussRat b7 = GaussRat(-2) * e7_inner(Phi, probe);  // Killing form of e7
    E7Elem ad2 = e7_bracket(Phi, e7_bracket(Phi, probe));
    FreudElem probeP = phi_action(probe, P), probeQ = phi_action(probe, Q);
    // (11) 18((ad Phi)^2 Phi1 + Q x Phi1 P - P x Phi1 Q) + (9/2) B7(Phi,Phi1) Phi = 0
    {
      E7Elem lhs = GaussRat(18) * (ad2 + p_cross_q(Q, probeP) - p_cross_q(P, probeQ)) +
                   (GaussRat(Rat(9, 2)) * b7) * Phi;
      if (!lhs.is_zero()) c11 = false;
    }
    // (12) 18(Phi1 Phi P - 2 Phi Phi1 P - r Phi1 P - s Phi1 Q) + (9/2) B7(Phi,Phi1) P = 0
    {
      FreudElem lhs =
          GaussRat(18) * (phi_action(probe, PhiP) - GaussRat(2) * phi_action(Phi, probeP) -
                          r * probeP - s * probeQ) +
          (GaussRat(Rat(9, 2)) * b7) * P;
      if (!lhs.is_zero()) c12 = false;
    }
    // (13) 18(Phi1 Phi Q - 2 Phi Phi1 Q + r Phi1 Q - t Phi1 P) + (9/2) B7(Phi,Phi1) Q = 0
    {
      FreudElem lhs =
          GaussRat(18) * (phi_action(probe, PhiQ) - GaussRat(2) * phi_action(Phi, probeQ) +
                          r * probeQ - t * probeP) +
          (GaussRat(Rat(9, 2)) * b7) * Q;
      if (!lhs.is_zero()) c13 = false;
    }
  }
  w.cond[10] = c11;
  w.cond[11] = c12;
  w.cond[12] = c13;
  return w;
}

// Cartan subalgebra h8: tau-diagonal e6 part, nu, r; tau3 = -tau1 - tau2.
inline E8Elem h8_element(const GaussRat& tau1, const GaussRat& tau2, const GaussRat& nu,
                         const GaussRat& r) {
  JordanElem t;
  t.xi[0] = tau1;
  t.xi[1] = tau2;
  t.xi[2] = -tau1 - tau2;
  E7Elem f = E7Elem::from_phi(e6_from_parts(F4Elem{}, t));
  f.nu = nu;
  E8Elem x = E8Elem::from_phi(f);
  x.r = r;
  return x;
}

inline E8Elem tau_e8(const E8Elem& x) {
  auto c = x.coords();
  for (auto& v : c) v = v.conj();
  return E8Elem::from_coords(c);
}

}  // namespace exla
