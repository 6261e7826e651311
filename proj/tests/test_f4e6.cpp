#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "exla/f4e6.hpp"

using namespace exla;

namespace {

const GaussRat half(Rat(1, 2));

Mat3 inverse3(const Mat3& m) {
  Mat3 inv(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<GaussRat> e(3);
    e[j] = GaussRat(1);
    auto col = solve_linear(m, e);
    for (std::size_t i = 0; i < 3; ++i) inv(i, j) = col[i];
  }
  return inv;
}

// rational orthogonal matrices: (E - S)(E + S)^{-1} for skew S
Mat3 cayley(const Mat3& s) {
  Mat3 e = Mat3::identity(3);
  return (e - s) * inverse3(e + s);
}

Mat3 random_skew(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  return a_matrix(1, GaussRat(Rat(num(rng), den(rng)))) +
         a_matrix(2, GaussRat(Rat(num(rng), den(rng)))) +
         a_matrix(3, GaussRat(Rat(num(rng), den(rng))));
}

JordanElem random_jordan(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  JordanElem e;
  for (int i = 0; i < 3; ++i) {
    e.xi[i] = GaussRat(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
    e.x[i] = GaussRat(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
  }
  return e;
}

E6Elem cartan_h6(const GaussRat& t1, const GaussRat& t2) {
  // tau = (t1, t2, -t1-t2) on the diagonal
  JordanElem t;
  t.xi[0] = t1;
  t.xi[1] = t2;
  t.xi[2] = -t1 - t2;
  return e6_from_parts(F4Elem{}, t);
}

}  // namespace

TEST_CASE("f4 bracket closed form agrees with the operator commutator") {
  F4Elem a1 = F4Elem::basis(1), a2 = F4Elem::basis(2), a3 = F4Elem::basis(3);
  CHECK(f4_bracket(a1, a2) == -half * a3);
  CHECK(f4_bracket(a1, GaussRat(5) * a1) == F4Elem{});
  CHECK(f4_bracket(a1, a3) == half * a2);

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int it = 0; it < 15; ++it) {
    F4Elem x, y;
    for (int i = 0; i < 3; ++i) {
      x.c[i] = GaussRat(Rat(d(rng)), Rat(d(rng)));
      y.c[i] = GaussRat(Rat(d(rng)), Rat(d(rng)));
    }
    CHECK(f4_bracket(x, y).to_operator() == commutator(x.to_operator(), y.to_operator()));
    CHECK(f4_bracket(x, y) == -f4_bracket(y, x));
  }
}

TEST_CASE("f4 jacobi identity on all basis triples") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        F4Elem a = F4Elem::basis(i), b = F4Elem::basis(j), c = F4Elem::basis(k);
        F4Elem jac = f4_bracket(a, f4_bracket(b, c)) + f4_bracket(b, f4_bracket(c, a)) +
                     f4_bracket(c, f4_bracket(a, b));
        CHECK(jac == F4Elem{});
      }
}

TEST_CASE("f4 killing form constants") {
  F4Elem a1 = F4Elem::basis(1);
  CHECK(f4_killing(a1, a1) == GaussRat(Rat(-1, 2)));
  CHECK((a1.to_operator().m * a1.to_operator().m).trace() == GaussRat(Rat(-5, 2)));
  CHECK(f4_killing(a1, F4Elem::basis(2)) == GaussRat(0));
  CHECK(f4_inner(a1, a1) == GaussRat(-2));
}

TEST_CASE("f4 basis operators are independent derivations") {
  Matrix<GaussRat> images(3, 36);
  for (int k = 0; k < 3; ++k) {
    JordanOperator op = F4Elem::basis(k + 1).to_operator();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) images(k, 6 * i + j) = op.m(i, j);
  }
  CHECK(rank(images) == 3);
}

TEST_CASE("f4c group map") {
  CHECK(f4c_group_map(Mat3::identity(3)) == JordanOperator::identity());

  Mat3 c2(3, 3);
  c2(0, 1) = c2(1, 0) = c2(2, 2) = GaussRat(1);
  CHECK(f4c_group_map(c2).apply(JordanElem::E(1)) == JordanElem::E(2));

  Mat3 bad = Mat3::identity(3);
  bad(0, 0) = GaussRat(2);
  CHECK_THROWS_AS(f4c_group_map(bad), NotOrthogonal);

  std::mt19937 rng(11);
  for (int it = 0; it < 10; ++it) {
    Mat3 a = cayley(random_skew(rng)), b = cayley(random_skew(rng));
    JordanOperator fa = f4c_group_map(a), fb = f4c_group_map(b);
    CHECK(f4c_group_map(a * b) == fa * fb);
    JordanElem x = random_jordan(rng), y = random_jordan(rng);
    CHECK(fa.apply(jordan_mul(x, y)) == jordan_mul(fa.apply(x), fa.apply(y)));
    CHECK(det(fa.apply(x)) == det(x));
  }
}

TEST_CASE("f4cstar differential") {
  CHECK(f4cstar(a_matrix(1, 1)) == GaussRat(2) * F4Elem::basis(1));
  CHECK(f4cstar(Mat3(3, 3)) == F4Elem{});
  CHECK_THROWS_AS(f4cstar(Mat3::identity(3)), NotSkew);

  // image operator is X -> DX + X tD
  std::mt19937 rng(13);
  for (int it = 0; it < 10; ++it) {
    Mat3 d = random_skew(rng);
    JordanOperator op = JordanOperator::from_action([&](const JordanElem& v) {
      Mat3 x = v.to_matrix();
      return JordanElem::from_matrix(d * x + x * d.transpose());
    });
    CHECK(f4cstar(d).to_operator() == op);
  }

  // Lie homomorphism on all skew basis pairs, and injectivity
  std::array<Mat3, 3> sk{a_matrix(1, 1), a_matrix(2, 1), a_matrix(3, 1)};
  for (const Mat3& x : sk)
    for (const Mat3& y : sk) {
      Mat3 br = x * y - y * x;
      CHECK(f4cstar(br) == f4_bracket(f4cstar(x), f4cstar(y)));
    }
  for (int i = 0; i < 3; ++i) CHECK_FALSE(f4cstar(sk[i]).is_zero());
}

TEST_CASE("e6 decompose and round trips") {
  JordanElem t = JordanElem::E(1) - JordanElem::E(2);
  E6Elem a = e6_decompose(t_tilde(t));
  CHECK(a.delta == F4Elem{});
  CHECK(a.t_elem() == t);

  E6Elem b = e6_decompose(a_tilde(1, 1));
  CHECK(b.delta == F4Elem::basis(1));
  CHECK(b.t_elem() == JordanElem());

  for (int k = 0; k < 8; ++k) {
    E6Elem e = E6Elem::basis(k);
    CHECK(e6_decompose(e.to_operator()) == e);
  }

  JordanOperator bad;
  bad.m(0, 0) = GaussRat(1);
  CHECK_THROWS_AS(e6_decompose(bad), NotInE6);
  CHECK_THROWS_AS(e6_from_parts(F4Elem{}, JordanElem::E(1)), NotTraceless);
}

TEST_CASE("e6 uniqueness: the assembly map is injective") {
  Matrix<GaussRat> images(8, 36);
  for (int k = 0; k < 8; ++k) {
    JordanOperator op = E6Elem::basis(k).to_operator();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) images(k, 6 * i + j) = op.m(i, j);
  }
  CHECK(rank(images) == 8);
}

TEST_CASE("f6cstar") {
  // restriction to skew matrices agrees with f4cstar
  CHECK(f6cstar(a_matrix(1, 1)).to_operator() == f4cstar(a_matrix(1, 1)).to_operator());

  Mat3 s(3, 3);
  s(0, 0) = GaussRat(1);
  s(1, 1) = GaussRat(-1);
  E6Elem e = f6cstar(s);
  CHECK(e.delta == F4Elem{});
  CHECK(e.t_elem() == GaussRat(2) * (JordanElem::E(1) - JordanElem::E(2)));

  CHECK_THROWS_AS(f6cstar(Mat3::identity(3)), NotTraceless);

  std::mt19937 rng(17);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int it = 0; it < 10; ++it) {
    Mat3 m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = GaussRat(Rat(d(rng)), Rat(d(rng)));
    m(2, 2) = -m(0, 0) - m(1, 1);
    E6Elem phi = f6cstar(m);
    JordanElem x = random_jordan(rng);
    CHECK(trilinear(phi.to_operator().apply(x), x, x).is_zero());
  }
}

TEST_CASE("f6cstar is bracket preserving on all sl(3) basis pairs and injective") {
  std::vector<Mat3> sl3;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Mat3 m(3, 3);
      m(i, j) = GaussRat(1);
      sl3.push_back(m);
    }
  for (int k = 0; k < 2; ++k) {
    Mat3 m(3, 3);
    m(k, k) = GaussRat(1);
    m(k + 1, k + 1) = GaussRat(-1);
    sl3.push_back(m);
  }
  REQUIRE(sl3.size() == 8);

  Matrix<GaussRat> images(8, 8);
  for (std::size_t a = 0; a < 8; ++a) {
    auto ca = f6cstar(sl3[a]).coords();
    for (int i = 0; i < 8; ++i) images(a, i) = ca[i];
    for (std::size_t b = 0; b < 8; ++b) {
      Mat3 br = sl3[a] * sl3[b] - sl3[b] * sl3[a];
      CHECK(f6cstar(br) == e6_bracket(f6cstar(sl3[a]), f6cstar(sl3[b])));
    }
  }
  CHECK(rank(images) == 8);
}

TEST_CASE("e6 jacobi identity on all basis triples") {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) {
        E6Elem a = E6Elem::basis(i), b = E6Elem::basis(j), c = E6Elem::basis(k);
        E6Elem jac = e6_bracket(a, e6_bracket(b, c)) + e6_bracket(b, e6_bracket(c, a)) +
                     e6_bracket(c, e6_bracket(a, b));
        CHECK(jac.is_zero());
      }
}

TEST_CASE("e6 killing form constants") {
  E6Elem e12 = e6_from_parts(F4Elem{}, JordanElem::E(1) - JordanElem::E(2));
  CHECK(e6_killing(e12, e12) == GaussRat(3));
  CHECK((e12.to_operator().m * e12.to_operator().m).trace() == GaussRat(Rat(5, 2)));

  // Cartan restriction: B(phi, phi') = (3/2) sum tau_i tau_i'
  std::mt19937 rng(19);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int it = 0; it < 8; ++it) {
    GaussRat t1(Rat(d(rng), 2)), t2(Rat(d(rng), 3)), u1(Rat(d(rng))), u2(Rat(d(rng), 2));
    GaussRat t3 = -t1 - t2, u3 = -u1 - u2;
    CHECK(e6_killing(cartan_h6(t1, t2), cartan_h6(u1, u2)) ==
          GaussRat(Rat(3, 2)) * (t1 * u1 + t2 * u2 + t3 * u3));
  }
}

TEST_CASE("lambda involution on e6") {
  JordanElem t = JordanElem::E(2) - JordanElem::E(3);
  E6Elem tt = e6_from_parts(F4Elem{}, t);
  CHECK(lambda_e6(tt) == -tt);
  E6Elem a1 = e6_decompose(a_tilde(1, 1));
  CHECK(lambda_e6(a1) == a1);
  for (int k = 0; k < 8; ++k) {
    E6Elem e = E6Elem::basis(k);
    CHECK(lambda_e6(lambda_e6(e)) == e);
  }
}

TEST_CASE("tau-lambda fixed points of e6") {
  Mat3 s(3, 3);
  s(0, 0) = GaussRat::i();
  s(1, 1) = -GaussRat::i();
  CHECK(tau_fixed_check(f6cstar(s)).second);
  CHECK_FALSE(tau_fixed_check(f6cstar(s)).first);  // coordinates are imaginary

  // real coordinates are tau-fixed but not tau-lambda-fixed (T~ flips sign)
  E6Elem real_t = e6_from_parts(F4Elem{}, JordanElem::E(1) - JordanElem::E(2));
  CHECK(tau_fixed_check(real_t).first);
  CHECK_FALSE(tau_fixed_check(real_t).second);

  // real form dimension: the fixed Q-subspace of the conjugate-linear
  // involution tau lambda has dimension 8 = dim su(3)
  auto sigma = [](const std::vector<GaussRat>& v) {
    std::array<GaussRat, 8> c;
    for (int i = 0; i < 8; ++i) c[i] = v[i];
    auto w = tau_e6(lambda_e6(E6Elem::from_coords(c))).coords();
    return std::vector<GaussRat>(w.begin(), w.end());
  };
  CHECK(fixed_subspace_dim_q(8, sigma) == 8);

  // rational su(3) basis: skew-hermitian traceless, entries in Q(i)
  std::vector<Mat3> su3;
  for (int k = 0; k < 2; ++k) {
    Mat3 m(3, 3);
    m(k, k) = GaussRat::i();
    m(k + 1, k + 1) = -GaussRat::i();
    su3.push_back(m);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Mat3 m(3, 3);
      m(i, j) = GaussRat(1);
      m(j, i) = GaussRat(-1);
      su3.push_back(m);
      Mat3 h(3, 3);
      h(i, j) = h(j, i) = GaussRat::i();
      su3.push_back(h);
    }
  REQUIRE(su3.size() == 8);
  std::vector<std::vector<GaussRat>> image_coords;
  for (const Mat3& m : su3) {
    E6Elem e = f6cstar(m);
    CHECK(tau_fixed_check(e).second);
    auto c = e.coords();
    image_coords.emplace_back(c.begin(), c.end());
  }
  CHECK(rank_over_q(image_coords) == 8);
}
