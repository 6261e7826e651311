#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "exla/jordan.hpp"

using namespace exla;

namespace {

JordanElem random_jordan(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  JordanElem e;
  for (int i = 0; i < 3; ++i) {
    e.xi[i] = GaussRat(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
    e.x[i] = GaussRat(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
  }
  return e;
}

JordanElem basis_elem(int k) {  // k in 0..5
  std::array<GaussRat, 6> c{};
  c[k] = GaussRat(1);
  return JordanElem::from_coords(c);
}

GaussRat det3(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

const GaussRat half(Rat(1, 2));
const GaussRat third(Rat(1, 3));

}  // namespace

TEST_CASE("jordan product basics") {
  CHECK(jordan_mul(JordanElem::E(1), JordanElem::E(1)) == JordanElem::E(1));
  CHECK(jordan_mul(JordanElem::F(1, 1), JordanElem::F(1, 1)) ==
        JordanElem::E(2) + JordanElem::E(3));

  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int it = 0; it < 20; ++it) {
    GaussRat x(Rat(d(rng)), Rat(d(rng))), y(Rat(d(rng)), Rat(d(rng)));
    JordanElem lhs = jordan_mul(JordanElem::F(1, x), JordanElem::F(2, y));
    CHECK(lhs + lhs == JordanElem::F(3, x * y));
  }
}

TEST_CASE("inner product and gram matrix") {
  CHECK(inner(JordanElem::E(1), JordanElem::E(1)) == GaussRat(1));
  CHECK(inner(JordanElem::F(1, 1), JordanElem::F(1, 1)) == GaussRat(2));
  JordanElem e12 = JordanElem::E(1) - JordanElem::E(2);
  CHECK(inner(e12, e12) == GaussRat(2));

  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(inner(basis_elem(i), basis_elem(j)) == jordan_gram()(i, j));
}

TEST_CASE("cross product examples") {
  JordanElem e = JordanElem::unit();
  CHECK(cross(e, e) == e);
  CHECK(cross(JordanElem::E(1), JordanElem::E(2)) == half * JordanElem::E(3));
  JordanElem s = JordanElem::E(1) + JordanElem::E(2);
  CHECK(cross(s, s) == JordanElem::E(3));
}

TEST_CASE("determinant and the adjugate identity") {
  CHECK(det(JordanElem::unit()) == GaussRat(1));
  CHECK(det(JordanElem::E(1)) == GaussRat(0));

  std::mt19937 rng(17);
  for (int it = 0; it < 25; ++it) {
    JordanElem x = random_jordan(rng);
    CHECK(det(x) == det3(x.to_matrix()));
    CHECK(jordan_mul(x, cross(x, x)) == det(x) * JordanElem::unit());
  }
  // basis-cubed sweep of the same identity
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j)
      for (int k = j; k < 6; ++k) {
        JordanElem x = basis_elem(i) + basis_elem(j) + basis_elem(k);
        CHECK(jordan_mul(x, cross(x, x)) == det(x) * JordanElem::unit());
      }
}

TEST_CASE("commutativity and trilinear symmetry") {
  std::mt19937 rng(23);
  for (int it = 0; it < 15; ++it) {
    JordanElem x = random_jordan(rng), y = random_jordan(rng), z = random_jordan(rng);
    CHECK(jordan_mul(x, y) == jordan_mul(y, x));
    CHECK(cross(x, y) == cross(y, x));
    GaussRat t = trilinear(x, y, z);
    CHECK(trilinear(x, z, y) == t);
    CHECK(trilinear(y, x, z) == t);
    CHECK(trilinear(y, z, x) == t);
    CHECK(trilinear(z, x, y) == t);
    CHECK(trilinear(z, y, x) == t);
  }
}

TEST_CASE("a_tilde satisfies the six defining identities, indexes mod 3") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int i = 1; i <= 3; ++i) {
    for (const GaussRat& c : {GaussRat(1), GaussRat::i(), GaussRat(Rat(1), Rat(2))}) {
      JordanOperator a = a_tilde(i, c);
      int i1 = i % 3 + 1, i2 = (i + 1) % 3 + 1;
      CHECK(a.apply(JordanElem::E(i)) == JordanElem());
      CHECK(a.apply(JordanElem::E(i1)) == -half * JordanElem::F(i, c));
      CHECK(a.apply(JordanElem::E(i2)) == half * JordanElem::F(i, c));
      GaussRat x(Rat(d(rng)), Rat(d(rng)));
      CHECK(a.apply(JordanElem::F(i, x)) ==
            (c * x) * (JordanElem::E(i1) - JordanElem::E(i2)));
      CHECK(a.apply(JordanElem::F(i1, x)) == half * JordanElem::F(i2, c * x));
      CHECK(a.apply(JordanElem::F(i2, x)) == -half * JordanElem::F(i1, c * x));
    }
  }
}

TEST_CASE("a_tilde is a derivation of the jordan product on all basis pairs") {
  for (int i = 1; i <= 3; ++i) {
    JordanOperator a = a_tilde(i, GaussRat(Rat(2), Rat(-3)));
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) {
        JordanElem x = basis_elem(p), y = basis_elem(q);
        CHECK(a.apply(jordan_mul(x, y)) ==
              jordan_mul(a.apply(x), y) + jordan_mul(x, a.apply(y)));
      }
  }
}

TEST_CASE("t_tilde basics") {
  CHECK(t_tilde(JordanElem::unit()) == JordanOperator::identity());
  JordanElem t = JordanElem::E(1) - JordanElem::E(2);
  CHECK(t_tilde(t).apply(JordanElem::F(3, 1)) == JordanElem());
  std::mt19937 rng(5);
  JordanElem s = random_jordan(rng);
  s.xi[2] = -s.xi[0] - s.xi[1];  // traceless
  CHECK(t_tilde(s).apply(JordanElem::unit()) == s);
}

TEST_CASE("vee operator") {
  JordanElem e = JordanElem::unit();
  CHECK(vee(e, e).is_zero());
  JordanElem t = JordanElem::E(1) - third * e;
  CHECK(vee(JordanElem::E(1), JordanElem::E(1)) == t_tilde(t));

  std::mt19937 rng(41);
  for (int it = 0; it < 10; ++it) {
    JordanElem x = random_jordan(rng), y = random_jordan(rng), w = random_jordan(rng);
    CHECK(vee(x + y, w) == vee(x, w) + vee(y, w));
    CHECK(vee(w, x + y) == vee(w, x) + vee(w, y));
  }
}

TEST_CASE("transpose_op") {
  std::mt19937 rng(43);
  JordanElem t = random_jordan(rng);
  CHECK(transpose_op(t_tilde(t)) == t_tilde(t));
  CHECK(transpose_op(a_tilde(1, 1)) == -a_tilde(1, 1));

  JordanOperator d = vee(random_jordan(rng), random_jordan(rng));
  CHECK(transpose_op(transpose_op(d)) == d);
  for (int it = 0; it < 10; ++it) {
    JordanElem x = random_jordan(rng), y = random_jordan(rng);
    CHECK(inner(transpose_op(d).apply(x), y) == inner(x, d.apply(y)));
  }
}

TEST_CASE("tau conjugation") {
  CHECK(tau(GaussRat::i() * JordanElem::E(1)) == -GaussRat::i() * JordanElem::E(1));
  CHECK(tau(JordanElem::unit()) == JordanElem::unit());
  std::mt19937 rng(47);
  for (int it = 0; it < 20; ++it) {
    JordanElem x = random_jordan(rng);
    CHECK(tau(tau(x)) == x);
    GaussRat h = inner(tau(x), x);
    CHECK(h.is_real());
    CHECK(h.re >= Rat(0));
    CHECK((h.is_zero() == x.is_zero()));
  }
  CHECK(inner(tau(JordanElem()), JordanElem()).is_zero());
}

TEST_CASE("diagonalization witnesses C2, C3") {
  Mat3 c2(3, 3), c3(3, 3);
  c2(0, 1) = c2(1, 0) = c2(2, 2) = GaussRat(1);
  c3(0, 0) = c3(1, 2) = c3(2, 1) = GaussRat(1);
  auto conj_by = [](const Mat3& c, const JordanElem& x) {
    return JordanElem::from_matrix(c.transpose() * x.to_matrix() * c);
  };
  CHECK(conj_by(c2, JordanElem::E(1)) == JordanElem::E(2));
  CHECK(conj_by(c3, JordanElem::E(2)) == JordanElem::E(3));
  // composing the two moves closes the cycle: C3*C2 carries E3 back to E1
  Mat3 c32 = c3 * c2;
  CHECK(c32 * c32.transpose() == Mat3::identity(3));
  CHECK(conj_by(c32, JordanElem::E(3)) == JordanElem::E(1));
}
