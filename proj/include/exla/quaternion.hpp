#pragma once

#include <array>
#include <vector>

#include "exla/errors.hpp"
#include "exla/freudenthal.hpp"
#include "exla/matrix.hpp"

namespace exla {

// Complexified quaternion: Q(i)-coefficients on the basis (1, e1, e2, e3).
// The scalar i and the quaternion units commute; e1*e2 = e3 cyclically.
struct QuatC {
  std::array<GaussRat, 4> c{};

  QuatC() = default;
  QuatC(GaussRat scalar) { c[0] = std::move(scalar); }  // NOLINT: implicit scalar embed
  QuatC(long n) { c[0] = GaussRat(n); }                 // NOLINT
  static QuatC unit(int k) {                             // k in 0..3
    QuatC q;
    q.c[k] = GaussRat(1);
    return q;
  }
  static QuatC e1() { return unit(1); }
  static QuatC e2() { return unit(2); }
  static QuatC e3() { return unit(3); }

  bool is_zero() const {
    for (const auto& v : c)
      if (!v.is_zero()) return false;
    return true;
  }
  bool is_scalar() const { return c[1].is_zero() && c[2].is_zero() && c[3].is_zero(); }
  // member of C^C = span{1, e1}
  bool is_cc() const { return c[2].is_zero() && c[3].is_zero(); }

  // full quaternion conjugation: negates e1, e2, e3
  QuatC conj() const {
    QuatC q = *this;
    for (int k = 1; k < 4; ++k) q.c[k] = -q.c[k];
    return q;
  }
  // the conjugation of C^C: negates e1 only, fixes the scalar i
  QuatC bar() const {
    if (!is_cc()) throw Error("overline applied outside C^C");
    QuatC q = *this;
    q.c[1] = -q.c[1];
    return q;
  }

  friend QuatC operator+(QuatC a, const QuatC& b) {
    for (int k = 0; k < 4; ++k) a.c[k] += b.c[k];
    return a;
  }
  friend QuatC operator-(QuatC a, const QuatC& b) {
    for (int k = 0; k < 4; ++k) a.c[k] -= b.c[k];
    return a;
  }
  QuatC& operator+=(const QuatC& b) { return *this = *this + b; }
  QuatC& operator-=(const QuatC& b) { return *this = *this - b; }
  QuatC operator-() const {
    QuatC q = *this;
    for (auto& v : q.c) v = -v;
    return q;
  }
  friend QuatC operator*(const QuatC& a, const QuatC& b) {
    const auto &p = a.c, &q = b.c;
    QuatC r;
    r.c[0] = p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3];
    r.c[1] = p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2];
    r.c[2] = p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1];
    r.c[3] = p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0];
    return r;
  }
  friend QuatC operator*(const GaussRat& s, QuatC a) {
    for (auto& v : a.c) v *= s;
    return a;
  }
  friend bool operator==(const QuatC& a, const QuatC& b) { return a.c == b.c; }
  friend bool operator!=(const QuatC& a, const QuatC& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const QuatC& q) {
    static const char* names[4] = {"", "e1", "e2", "e3"};
    bool first = true;
    for (int k = 0; k < 4; ++k) {
      if (q.c[k].is_zero()) continue;
      os << (first ? "" : " + ") << "(" << q.c[k] << ")" << names[k];
      first = false;
    }
    if (first) os << "0";
    return os;
  }
};

// iota = (1/2)(1 + i e1): with its e1-conjugate it splits C^C into two ideals
inline QuatC iota() {
  QuatC q;
  q.c[0] = GaussRat(Rat(1, 2));
  q.c[1] = GaussRat(Rat(0), Rat(1, 2));
  return q;
}
inline QuatC iota_bar() { return iota().bar(); }
inline std::pair<QuatC, QuatC> iota_pair() { return {iota(), iota_bar()}; }

using QuatMat = Matrix<QuatC>;

inline QuatMat quat_conj_transpose(const QuatMat& m) {
  QuatMat r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
  return r;
}

inline bool is_sp3(const QuatMat& d) {
  return d.rows() == 3 && d.cols() == 3 && (d + quat_conj_transpose(d)).is_zero();
}

// check for su(3, C^C): entries in C^C, B + t(bar B) = 0, tr = 0
inline bool is_su3cc(const QuatMat& b) {
  if (b.rows() != 3 || b.cols() != 3) return false;
  QuatC tr;
  for (int i = 0; i < 3; ++i) {
    tr += b(i, i);
    for (int j = 0; j < 3; ++j) {
      if (!b(i, j).is_cc()) return false;
      if (!(b(i, j) + b(j, i).bar()).is_zero()) return false;
    }
  }
  return tr.is_zero();
}

// D = B + L(e2 E) + s E with B in su(3,C^C), L symmetric over C^C, s in C e1.
struct Sp3Decomp {
  QuatMat b{3, 3};  // entries in C^C
  QuatMat l{3, 3};  // symmetric, entries in C^C
  GaussRat s;       // coefficient of e1
};

inline QuatMat sp3_reassemble(const Sp3Decomp& d) {
  QuatMat m = d.b;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) += d.l(i, j) * QuatC::e2();
    m(i, i) += d.s * QuatC::e1();
  }
  return m;
}

// unique decomposition of an sp(3,H^C) element
inline Sp3Decomp decompose_sp3(const QuatMat& d) {
  if (!is_sp3(d)) throw NotSp3();
  Sp3Decomp out;
  std::array<GaussRat, 3> r;
  for (int i = 0; i < 3; ++i) {
    // diagonal entry: r_i e1 + (c2 + c3 e1) e2
    r[i] = d(i, i).c[1];
    QuatC l;
    l.c[0] = d(i, i).c[2];
    l.c[1] = d(i, i).c[3];
    out.l(i, i) = l;
    for (int j = i + 1; j < 3; ++j) {
      // off-diagonal entry: p + q e2 with p, q in C^C
      QuatC p, q;
      p.c[0] = d(i, j).c[0];
      p.c[1] = d(i, j).c[1];
      q.c[0] = d(i, j).c[2];
      q.c[1] = d(i, j).c[3];
      out.b(i, j) = p;
      out.b(j, i) = -p.bar();
      out.l(i, j) = out.l(j, i) = q;
    }
  }
  out.s = GaussRat(Rat(1, 3)) * (r[0] + r[1] + r[2]);
  for (int i = 0; i < 3; ++i) {
    QuatC bi;
    bi.c[1] = r[i] - out.s;
    out.b(i, i) = bi;
  }
  if (sp3_reassemble(out) != d) throw InternalMismatch("sp3 decomposition does not reassemble");
  return out;
}

// g(B) = iota B - iota_bar tB: carries su(3,C^C) onto sl(3,C)
inline Mat3 g_map(const QuatMat& b) {
  if (!is_su3cc(b)) throw NotSU3CC();
  Mat3 m(3, 3);
  QuatC io = iota(), iob = iota_bar();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      QuatC v = io * b(i, j) - iob * b(j, i);
      if (!v.is_scalar()) throw NotSU3CC();
      m(i, j) = v.c[0];
    }
  if (!m.trace().is_zero()) throw NotSU3CC();
  return m;
}

// the 8 basis elements of su(3,C^C) (equally: the rational points of su(3))
inline const std::vector<QuatMat>& su3cc_basis() {
  static const std::vector<QuatMat> basis = [] {
    std::vector<QuatMat> v;
    for (int k = 0; k < 2; ++k) {
      QuatMat m(3, 3);
      m(k, k) = QuatC::e1();
      m(k + 1, k + 1) = -QuatC::e1();
      v.push_back(m);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        QuatMat m(3, 3);
        m(i, j) = QuatC(1);
        m(j, i) = QuatC(-1);
        v.push_back(m);
        QuatMat h(3, 3);
        h(i, j) = h(j, i) = QuatC::e1();
        v.push_back(h);
      }
    return v;
  }();
  return basis;
}

// inverse of g by linear solve over the su(3,C^C) coordinate basis
inline QuatMat g_inverse(const Mat3& m) {
  const auto& basis = su3cc_basis();
  Matrix<GaussRat> sys(9, 8);
  for (int k = 0; k < 8; ++k) {
    Mat3 img = g_map(basis[k]);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) sys(3 * i + j, k) = img(i, j);
  }
  std::vector<GaussRat> rhs(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rhs[3 * i + j] = m(i, j);
  auto x = solve_linear(sys, rhs);
  QuatMat b(3, 3);
  for (int k = 0; k < 8; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b(i, j) += x[k] * basis[k](i, j);
  return b;
}

// f7C*(B + L(e2 E) + s E) =
//   Phi(f6C*(g(B)), -(iota L + bar-iota bar-L), bar-iota L + iota bar-L, 3(iota - bar-iota)s)
inline E7Elem f7cstar(const QuatMat& d) {
  Sp3Decomp parts = decompose_sp3(d);
  QuatC io = iota(), iob = iota_bar();

  auto mix = [&](const QuatC& u, const QuatC& v) {
    Mat3 m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        QuatC w = u * parts.l(i, j) + v * parts.l(i, j).bar();
        if (!w.is_scalar()) throw InternalMismatch("f7cstar A/B slot left the scalars");
        m(i, j) = w.c[0];
      }
    return m;
  };

  E7Elem e;
  e.phi = f6cstar(g_map(parts.b));
  e.a = JordanElem::from_matrix(-mix(io, iob));
  e.b = JordanElem::from_matrix(mix(iob, io));
  QuatC nu = GaussRat(3) * ((io - iob) * (parts.s * QuatC::e1()));
  if (!nu.is_scalar()) throw InternalMismatch("f7cstar nu slot left the scalars");
  e.nu = nu.c[0];
  return e;
}

// rational basis of the compact form sp(3): 8 su(3) + 12 symmetric C . e2 + e1 E
inline const std::vector<QuatMat>& sp3_real_basis() {
  static const std::vector<QuatMat> basis = [] {
    std::vector<QuatMat> v = su3cc_basis();
    for (int u = 0; u < 2; ++u) {  // L entries 1 or e1, times e2
      QuatC unit = (u == 0) ? QuatC(1) : QuatC::e1();
      for (int i = 0; i < 3; ++i) {
        QuatMat m(3, 3);
        m(i, i) = unit * QuatC::e2();
        v.push_back(m);
      }
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          QuatMat m(3, 3);
          m(i, j) = m(j, i) = unit * QuatC::e2();
          v.push_back(m);
        }
    }
    QuatMat s(3, 3);
    for (int i = 0; i < 3; ++i) s(i, i) = QuatC::e1();
    v.push_back(s);
    return v;
  }();
  return basis;
}

struct F7RealFormReport {
  bool images_tau_lambda_fixed = false;
  std::size_t image_rank_over_q = 0;
  std::size_t fixed_subspace_dim = 0;
  bool ok() const {
    return images_tau_lambda_fixed && image_rank_over_q == 21 && fixed_subspace_dim == 21;
  }
};

// Compact-form certification: images of the rational sp(3) basis are
// tau-lambda fixed, independent over Q, and exhaust the fixed subspace.
inline F7RealFormReport f7rstar_check() {
  F7RealFormReport rep;
  rep.images_tau_lambda_fixed = true;
  std::vector<std::vector<GaussRat>> image_coords;
  for (const QuatMat& d : sp3_real_basis()) {
    E7Elem e = f7cstar(d);
    if (!tau_lambda_fixed_e7(e)) rep.images_tau_lambda_fixed = false;
    auto c = e.coords();
    image_coords.emplace_back(c.begin(), c.end());
  }
  rep.image_rank_over_q = rank_over_q(image_coords);
  rep.fixed_subspace_dim = fixed_subspace_dim_q(21, [](const std::vector<GaussRat>& v) {
    std::array<GaussRat, 21> c;
    for (int i = 0; i < 21; ++i) c[i] = v[i];
    auto w = tau_e7(lambda_star_e7(E7Elem::from_coords(c))).coords();
    return std::vector<GaussRat>(w.begin(), w.end());
  });
  return rep;
}

}  // namespace exla
