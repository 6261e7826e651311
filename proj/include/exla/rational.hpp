#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

#include "exla/errors.hpp"

namespace exla {

// Arbitrary-precision rational, always reduced with positive denominator
// (mpq_class keeps that canonical form for us).
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: implicit by design, lets 2*x read naturally
  Rat(long n, long d) {
    if (d == 0) throw DivisionByZero();
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rat(mpz_class n) : q_(std::move(n)) {}
  Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero();
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) {}

  // Parses "p/q" or "p".
  static Rat parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    return Rat(q);
  }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

  // Canonical "p/q" form used in every serialization.
  std::string str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    if (r.is_integer()) return os << r.q_.get_num().get_str();
    return os << r.str();
  }

 private:
  mpq_class q_;
};

// Element of Q(i): the scalar field of the whole library.
struct GaussRat {
  Rat re, im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}  // NOLINT: implicit by design
  GaussRat(long n) : re(n) {}            // NOLINT
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  GaussRat conj() const { return GaussRat(re, -im); }
  Rat norm() const { return re * re + im * im; }  // z * conj(z)

  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_zero()) throw DivisionByZero();
    Rat n = o.norm();
    GaussRat t = *this;
    t *= o.conj();
    re = t.re / n;
    im = t.im / n;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return GaussRat(-re, -im); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  // Lexicographic (re, im) order; used for deterministic root positivity.
  friend bool lex_less(const GaussRat& a, const GaussRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::string str() const {
    auto pretty = [](const Rat& r) {
      return r.is_integer() ? r.numerator().get_str() : r.str();
    };
    if (is_real()) return pretty(re);
    if (re.is_zero()) return pretty(im) + "i";
    return pretty(re) + (im.sign() >= 0 ? "+" : "") + pretty(im) + "i";
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
    return os << z.str();
  }
};

inline GaussRat conj(const GaussRat& z) { return z.conj(); }

}  // namespace exla
