#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "exla/errors.hpp"
#include "exla/matrix.hpp"
#include "exla/rational.hpp"

namespace exla {

// Polynomial over Q(i), coefficients lowest degree first. Empty vector is the
// zero polynomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussRat> c) : c_(std::move(c)) { normalize(); }
  static Poly x() { return Poly({GaussRat(0), GaussRat(1)}); }
  static Poly constant(GaussRat v) { return Poly({std::move(v)}); }

  const std::vector<GaussRat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  GaussRat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : GaussRat(); }
  GaussRat leading() const { return c_.empty() ? GaussRat() : c_.back(); }

  GaussRat eval(const GaussRat& z) const {
    GaussRat v;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * z + c_[i];
    return v;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GaussRat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = GaussRat(Rat(long(i))) * c_[i];
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussRat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussRat> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussRat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division, divisor nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<GaussRat> r = a.c_;
    std::vector<GaussRat> q;
    long db = b.degree();
    if (a.degree() >= db) q.assign(a.degree() - db + 1, GaussRat());
    for (long i = a.degree(); i >= db; --i) {
      GaussRat f = r[i] / b.c_.back();
      if (f.is_zero()) continue;
      q[i - db] = f;
      for (long j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }

  Poly monic() const {
    if (is_zero()) return Poly();
    std::vector<GaussRat> c = c_;
    for (GaussRat& v : c) v /= c_.back();
    return Poly(std::move(c));
  }

  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
    if (p.is_zero()) return os << "0";
    for (std::size_t i = p.c_.size(); i-- > 0;) {
      if (p.c_[i].is_zero()) continue;
      os << "(" << p.c_[i] << ")x^" << i << (i > 0 ? " + " : "");
    }
    return os;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussRat> c_;
};

template <typename T>
Poly char_poly(const Matrix<T>& m) {
  return Poly(char_poly_coeffs(m));
}

// ---------------------------------------------------------------------------
// Gaussian integers: support for exact root extraction over Q(i).
// ---------------------------------------------------------------------------

struct Gint {
  mpz_class a, b;  // a + b*i

  Gint() : a(0), b(0) {}
  Gint(mpz_class x, mpz_class y) : a(std::move(x)), b(std::move(y)) {}
  explicit Gint(long x) : a(x), b(0) {}

  mpz_class norm() const { return a * a + b * b; }
  bool is_zero() const { return a == 0 && b == 0; }
  Gint conj() const { return Gint(a, -b); }
  friend Gint operator*(const Gint& x, const Gint& y) {
    return Gint(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a);
  }
  friend Gint operator-(const Gint& x, const Gint& y) { return Gint(x.a - y.a, x.b - y.b); }
  friend bool operator==(const Gint& x, const Gint& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator<(const Gint& x, const Gint& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
  GaussRat to_gauss_rat() const { return GaussRat(Rat(a), Rat(b)); }
};

namespace detail {

inline mpz_class round_div(const mpz_class& x, const mpz_class& n) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), mpz_class(2 * x + n).get_mpz_t(), mpz_class(2 * n).get_mpz_t());
  return q;
}

// Exact division in Z[i]; returns false if not divisible.
inline bool gdiv_exact(const Gint& z, const Gint& w, Gint& out) {
  mpz_class n = w.norm();
  Gint t = z * w.conj();
  if (t.a % n != 0 || t.b % n != 0) return false;
  out = Gint(t.a / n, t.b / n);
  return true;
}

inline Gint ggcd(Gint x, Gint y) {
  while (!y.is_zero()) {
    mpz_class n = y.norm();
    Gint t = x * y.conj();
    Gint q(round_div(t.a, n), round_div(t.b, n));
    Gint r = x - q * y;
    x = y;
    y = r;
  }
  return x;
}

// Pollard rho (Brent variant) + trial division; inputs here are norms of
// small spectra, so they are smooth and factor instantly.
inline void factor_mpz(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  mpz_class d(17);
  while (n > 1 && d * d <= n && d < 100000) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
    d += 2;
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    ++out[n];
    return;
  }
  // Brent's cycle finding for a nontrivial factor.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(2026);
  for (;;) {
    mpz_class c = rng.get_z_range(n - 3) + 1;
    mpz_class x = rng.get_z_range(n - 2) + 1, y = x, g = 1;
    auto step = [&](mpz_class v) { return mpz_class((v * v + c) % n); };
    while (g == 1) {
      x = step(x);
      y = step(step(y));
      g = gcd(mpz_class(x > y ? x - y : y - x), n);
    }
    if (g != n) {
      factor_mpz(g, out);
      factor_mpz(n / g, out);
      return;
    }
  }
}

// x with x^2 = -1 mod p, for p = 1 mod 4.
inline mpz_class sqrt_minus_one(const mpz_class& p) {
  mpz_class e = (p - 1) / 4;
  for (mpz_class a = 2;; ++a) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if ((x * x) % p == p - 1) return x;
  }
}

struct GintFactorization {
  std::vector<std::pair<Gint, unsigned>> primes;
};

inline GintFactorization gint_factor(Gint z) {
  GintFactorization f;
  std::map<mpz_class, unsigned> np;
  factor_mpz(z.norm(), np);
  for (const auto& [p, e] : np) {
    std::vector<Gint> cands;
    if (p == 2) {
      cands.push_back(Gint(1, 1));
    } else if (p % 4 == 3) {
      cands.push_back(Gint(mpz_class(p), mpz_class(0)));
    } else {
      Gint pi = ggcd(Gint(mpz_class(p), mpz_class(0)), Gint(sqrt_minus_one(p), mpz_class(1)));
      cands.push_back(pi);
      cands.push_back(pi.conj());
    }
    for (const Gint& pi : cands) {
      unsigned k = 0;
      Gint q;
      while (gdiv_exact(z, pi, q)) {
        z = q;
        ++k;
      }
      if (k > 0) f.primes.emplace_back(pi, k);
    }
  }
  if (z.norm() != 1) throw Error("gaussian factorization left a non-unit");
  return f;
}

// All divisors (one per associate class) with norm <= bound, by ascending norm.
inline void divisors_bounded(const GintFactorization& f, const mpz_class& bound,
                             std::vector<Gint>& out) {
  out.clear();
  out.push_back(Gint(1));
  std::vector<Gint> next;
  for (const auto& [pi, e] : f.primes) {
    next.clear();
    for (const Gint& d : out) {
      Gint v = d;
      for (unsigned k = 0; k <= e; ++k) {
        if (v.norm() > bound) break;
        next.push_back(v);
        if (k < e) v = v * pi;
      }
    }
    out.swap(next);
  }
  std::vector<std::pair<mpz_class, std::size_t>> keys(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keys[i] = {out[i].norm(), i};
  std::sort(keys.begin(), keys.end(),
            [&](const auto& x, const auto& y) {
              if (x.first != y.first) return x.first < y.first;
              return out[x.second] < out[y.second];
            });
  std::vector<Gint> sorted(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) sorted[i] = out[keys[i].second];
  out.swap(sorted);
}

// Synthetic division of a monic Z[i] polynomial (low-first) by (y - y0).
// Returns true and replaces c by the quotient when the remainder is zero.
inline bool deflate(std::vector<Gint>& c, const Gint& y0) {
  std::vector<Gint> quot(c.size() - 1);
  Gint acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    quot[i] = acc;
    Gint t = y0 * acc;
    acc = c[i];
    acc.a += t.a;
    acc.b += t.b;
  }
  if (!acc.is_zero()) return false;
  c = std::move(quot);
  return true;
}

}  // namespace detail

struct RootsResult {
  std::vector<std::pair<GaussRat, int>> roots;  // root, multiplicity
  bool splits = false;
};

// Exact roots of p over Q(i). The candidate set comes from Gaussian-divisor
// enumeration of the constant term after the x -> y/L substitution makes the
// polynomial monic over Z[i]; the norm bound grows adaptively up to the
// Cauchy bound so the "splits" flag is exact, never heuristic.
inline RootsResult gaussian_rational_roots(const Poly& p) {
  if (p.is_zero()) throw Error("gaussian_rational_roots: zero polynomial");
  RootsResult res;
  std::vector<GaussRat> c = p.coeffs().empty() ? std::vector<GaussRat>{} : p.coeffs();

  std::size_t k0 = 0;
  while (k0 < c.size() && c[k0].is_zero()) ++k0;
  if (k0 > 0) res.roots.emplace_back(GaussRat(0), int(k0));
  std::vector<GaussRat> q(c.begin() + k0, c.end());
  const std::size_t n = q.size() - 1;  // degree after stripping x^k0
  if (n == 0) {
    res.splits = true;
    return res;
  }
  for (GaussRat& v : q) v /= q.back();

  mpz_class L(1);
  for (const GaussRat& v : q) {
    mpz_class l = lcm(v.re.denominator(), v.im.denominator());
    L = lcm(L, l);
  }
  // g(y) = L^n p(y/L), monic over Z[i]
  std::vector<Gint> g(n + 1);
  mpz_class Lp(1);
  for (std::size_t i = n + 1; i-- > 0;) {
    // coefficient q[i] * L^{n-i}
    Rat re = q[i].re * Rat(Lp);
    Rat im = q[i].im * Rat(Lp);
    if (!re.is_integer() || !im.is_integer()) throw Error("denominator clearing failed");
    g[i] = Gint(re.numerator(), im.numerator());
    Lp *= L;
  }

  // Deflation handles multiplicities directly, so no squarefree reduction is
  // needed (a gcd on these coefficient sizes would be the bottleneck).
  detail::GintFactorization fac = detail::gint_factor(g[0]);
  mpz_class max_norm(0);
  for (std::size_t i = 0; i + 1 < g.size(); ++i) max_norm = std::max(max_norm, g[i].norm());
  const mpz_class cauchy_bound = 2 * (max_norm + 1);

  std::vector<Gint> work = g;
  std::vector<std::pair<Gint, int>> found;
  mpz_class H(1024), prev_H(0);
  std::vector<Gint> divs;
  auto poly_eval = [](const std::vector<Gint>& cc, const Gint& y) {
    Gint v;
    for (std::size_t i = cc.size(); i-- > 0;) {
      v = v * y;
      v.a += cc[i].a;
      v.b += cc[i].b;
    }
    return v;
  };
  // cheap divisibility filter: a root y0 forces (1 - y0) | w(1) and
  // (-1 - y0) | w(-1) in Z[i]
  Gint w_at_1 = poly_eval(work, Gint(1)), w_at_m1 = poly_eval(work, Gint(-1));
  Gint scratch;
  auto passes_filter = [&](const Gint& y0) {
    Gint d1(1 - y0.a, -y0.b), d2(-1 - y0.a, -y0.b);
    if (!d1.is_zero() && !w_at_1.is_zero() && !detail::gdiv_exact(w_at_1, d1, scratch))
      return false;
    if (!d2.is_zero() && !w_at_m1.is_zero() && !detail::gdiv_exact(w_at_m1, d2, scratch))
      return false;
    return true;
  };
  while (work.size() > 1) {
    bool last_pass = H >= cauchy_bound;
    detail::divisors_bounded(fac, H, divs);
    for (const Gint& d : divs) {
      if (work.size() <= 1) break;
      if (d.norm() <= prev_H) continue;
      for (const Gint& u : {Gint(mpz_class(1), mpz_class(0)), Gint(mpz_class(-1), mpz_class(0)),
                            Gint(mpz_class(0), mpz_class(1)), Gint(mpz_class(0), mpz_class(-1))}) {
        Gint y0 = u * d;
        if (work.size() > 1 && passes_filter(y0) && poly_eval(work, y0).is_zero()) {
          int mult = 0;
          while (work.size() > 1 && detail::deflate(work, y0)) ++mult;
          found.emplace_back(y0, mult);
          w_at_1 = poly_eval(work, Gint(1));
          w_at_m1 = poly_eval(work, Gint(-1));
        }
      }
    }
    if (work.size() <= 1) break;
    if (last_pass) break;
    prev_H = H;
    H *= 16;
    if (H > cauchy_bound) H = cauchy_bound;
  }

  for (const auto& [y0, mult] : found)
    res.roots.emplace_back(GaussRat(Rat(y0.a, L), Rat(y0.b, L)), mult);

  long total = 0;
  for (const auto& [root, mult] : res.roots) total += mult;
  res.splits = (total == p.degree());
  return res;
}

}  // namespace exla
