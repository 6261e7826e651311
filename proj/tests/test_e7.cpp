#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "exla/freudenthal.hpp"

using namespace exla;

namespace {

const GaussRat third(Rat(1, 3));
const GaussRat two_thirds(Rat(2, 3));

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

E7Elem random_e7(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 2);
  std::array<GaussRat, 21> c;
  for (auto& v : c) v = GaussRat(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
  return E7Elem::from_coords(c);
}

FreudElem random_freud(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::array<GaussRat, 14> c;
  for (auto& v : c) v = GaussRat(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
  return FreudElem::from_coords(c);
}

// Cartan element of h7: tau diagonal plus nu
E7Elem cartan_h7(const GaussRat& t1, const GaussRat& t2, const GaussRat& nu) {
  JordanElem t;
  t.xi[0] = t1;
  t.xi[1] = t2;
  t.xi[2] = -t1 - t2;
  E7Elem e = E7Elem::from_phi(e6_from_parts(F4Elem{}, t));
  e.nu = nu;
  return e;
}

// closed-form bracket used as an independent oracle against the
// commutator-plus-projection implementation
E7Elem e7_bracket_closed_form(const E7Elem& f, const E7Elem& g) {
  E7Elem r;
  JordanOperator av = GaussRat(2) * (vee(f.a, g.b) - vee(g.a, f.b));
  r.phi = e6_bracket(f.phi, g.phi) + e6_decompose(av);
  JordanOperator op1 = f.phi.to_operator(), op2 = g.phi.to_operator();
  JordanOperator top1 = e6_transpose_operator(f.phi), top2 = e6_transpose_operator(g.phi);
  r.a = op1.apply(g.a) + (two_thirds * f.nu) * g.a - op2.apply(f.a) - (two_thirds * g.nu) * f.a;
  r.b = -top1.apply(g.b) - (two_thirds * f.nu) * g.b + top2.apply(f.b) + (two_thirds * g.nu) * f.b;
  r.nu = inner(f.a, g.b) - inner(f.b, g.a);
  return r;
}

}  // namespace

TEST_CASE("phi action formula") {
  E7Elem phi0 = E7Elem::from_nu(GaussRat(1));
  std::mt19937 rng(3);
  FreudElem p = random_freud(rng);
  FreudElem q = phi_action(phi0, p);
  CHECK(q.x == -third * p.x);
  CHECK(q.y == third * p.y);
  CHECK(q.xi == p.xi);
  CHECK(q.eta == -p.eta);

  JordanElem a = random_jordan(rng);
  CHECK(phi_action(E7Elem::from_a(a), FreudElem::underdot1()) == FreudElem::from_x(a));

  E7Elem f = random_e7(rng);
  FreudElem r = phi_action(f, FreudElem::underdot1());
  CHECK(r.x == f.a);
  CHECK(r.y == JordanElem());
  CHECK(r.xi == GaussRat(0));
  CHECK(r.eta == -f.nu);
}

TEST_CASE("e7_from_operator round trips and rejects outsiders") {
  std::mt19937 rng(5);
  for (int it = 0; it < 10; ++it) {
    E7Elem f = random_e7(rng);
    CHECK(e7_from_operator(e7_to_matrix(f)) == f);
  }
  Matrix<GaussRat> bad(14, 14);
  bad(0, 1) = GaussRat(1);  // X <- X block off-span perturbation
  CHECK_THROWS_AS(e7_from_operator(bad), NotInE7);
}

TEST_CASE("freudenthal cross operation") {
  FreudElem d1 = FreudElem::dot1(), u1 = FreudElem::underdot1();
  CHECK(p_cross_q(d1, d1).is_zero());

  E7Elem c = p_cross_q(d1, u1);
  CHECK(c.phi.is_zero());
  CHECK(c.a.is_zero());
  CHECK(c.b.is_zero());
  CHECK(c.nu == GaussRat(Rat(-3, 8)));

  FreudElem e1dot = FreudElem::from_x(JordanElem::E(1));
  FreudElem e1under = FreudElem::from_y(JordanElem::E(1));
  E7Elem c2 = p_cross_q(e1dot, e1under);
  CHECK(c2.phi ==
        e6_decompose(GaussRat(Rat(-1, 2)) * vee(JordanElem::E(1), JordanElem::E(1))));
  CHECK(c2.a.is_zero());
  CHECK(c2.b.is_zero());
  CHECK(c2.nu == GaussRat(Rat(1, 8)));

  // symmetry and bilinearity
  std::mt19937 rng(7);
  for (int it = 0; it < 8; ++it) {
    FreudElem p = random_freud(rng), q = random_freud(rng), r = random_freud(rng);
    CHECK(p_cross_q(p, q) == p_cross_q(q, p));
    CHECK(p_cross_q(p + r, q) == p_cross_q(p, q) + p_cross_q(r, q));
  }
}

TEST_CASE("e7 bracket examples") {
  E7Elem phi0 = E7Elem::from_nu(GaussRat(1));
  std::mt19937 rng(11);
  JordanElem a = random_jordan(rng), b = random_jordan(rng);
  E7Elem g = E7Elem::from_a(a) + E7Elem::from_b(b);
  E7Elem br = e7_bracket(phi0, g);
  CHECK(br == E7Elem::from_a(two_thirds * a) - E7Elem::from_b(two_thirds * b));

  // Cartan action on Phi(0, E1, 0, 0)
  GaussRat t1(Rat(1, 2)), t2(Rat(3)), nu(Rat(-2, 3));
  E7Elem h = cartan_h7(t1, t2, nu);
  E7Elem v = E7Elem::from_a(JordanElem::E(1));
  CHECK(e7_bracket(h, v) == (t1 + two_thirds * nu) * v);

  for (int it = 0; it < 6; ++it) {
    E7Elem x = random_e7(rng), y = random_e7(rng);
    CHECK(e7_bracket(x, y) == -e7_bracket(y, x));
  }
}

TEST_CASE("e7 bracket agrees with the closed-form oracle on all basis pairs") {
  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j) {
      E7Elem x = E7Elem::basis(i), y = E7Elem::basis(j);
      CHECK(e7_bracket(x, y) == e7_bracket_closed_form(x, y));
    }
}

TEST_CASE("e7 dimension: 21 independent operators") {
  Matrix<GaussRat> images(21, 196);
  for (int k = 0; k < 21; ++k) {
    const Matrix<GaussRat>& m = e7_basis_matrices()[k];
    for (int i = 0; i < 14; ++i)
      for (int j = 0; j < 14; ++j) images(k, 14 * i + j) = m(i, j);
  }
  CHECK(rank(images) == 21);
}

TEST_CASE("e7 killing form constants") {
  E7Elem phi0 = E7Elem::from_nu(GaussRat(1));
  CHECK(e7_inner(phi0, phi0) == GaussRat(Rat(-8, 3)));
  CHECK(e7_killing(phi0, phi0) == GaussRat(Rat(16, 3)));
  CHECK((e7_to_matrix(phi0) * e7_to_matrix(phi0)).trace() == GaussRat(Rat(10, 3)));

  // Cartan restriction: B7 = 4 sum tau tau' + (16/3) nu nu'
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int it = 0; it < 5; ++it) {
    GaussRat t1(Rat(d(rng), 2)), t2(Rat(d(rng))), n1(Rat(d(rng), 3));
    GaussRat u1(Rat(d(rng))), u2(Rat(d(rng), 2)), n2(Rat(d(rng)));
    GaussRat t3 = -t1 - t2, u3 = -u1 - u2;
    CHECK(e7_killing(cartan_h7(t1, t2, n1), cartan_h7(u1, u2, n2)) ==
          GaussRat(4) * (t1 * u1 + t2 * u2 + t3 * u3) + GaussRat(Rat(16, 3)) * n1 * n2);
  }
}

TEST_CASE("lambda and the skew inner product") {
  CHECK(lambda_map(FreudElem::dot1()) == -FreudElem::underdot1());
  CHECK(skew_inner(FreudElem::dot1(), FreudElem::underdot1()) == GaussRat(1));
  for (int k = 0; k < 14; ++k) {
    FreudElem p = FreudElem::basis(k);
    CHECK(lambda_map(lambda_map(p)) == -p);
  }
  std::mt19937 rng(17);
  for (int it = 0; it < 10; ++it) {
    FreudElem p = random_freud(rng), q = random_freud(rng);
    CHECK(skew_inner(p, q) == -skew_inner(q, p));
    // (P,Q) = {lambda P, Q} links the symmetric and skew inner products
    GaussRat sym = inner(p.x, q.x) + inner(p.y, q.y) + p.xi * q.xi + p.eta * q.eta;
    CHECK(sym == skew_inner(lambda_map(p), q));
  }
}

TEST_CASE("infinitesimal symplectic invariance on all basis triples") {
  for (int k = 0; k < 21; ++k) {
    E7Elem f = E7Elem::basis(k);
    for (int i = 0; i < 14; ++i) {
      FreudElem fp = phi_action(f, FreudElem::basis(i));
      for (int j = 0; j < 14; ++j) {
        FreudElem q = FreudElem::basis(j);
        CHECK(skew_inner(fp, q) + skew_inner(FreudElem::basis(i), phi_action(f, q)) ==
              GaussRat(0));
      }
    }
  }
}

TEST_CASE("derivation law: [Phi, P x Q] = Phi P x Q + P x Phi Q on basis elements") {
  // certifies the defining e7 condition at the algebra level
  for (int k = 0; k < 21; ++k) {
    E7Elem f = E7Elem::basis(k);
    for (int i = 0; i < 14; ++i)
      for (int j = i; j < 14; ++j) {
        FreudElem p = FreudElem::basis(i), q = FreudElem::basis(j);
        E7Elem lhs = e7_bracket(f, p_cross_q(p, q));
        E7Elem rhs = p_cross_q(phi_action(f, p), q) + p_cross_q(p, phi_action(f, q));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("membership in M") {
  CHECK(in_m(FreudElem::dot1()));
  CHECK_FALSE(in_m(FreudElem::from_x(JordanElem::unit())));
  CHECK_FALSE(in_m(FreudElem()));
}

TEST_CASE("stabilizer of underdot-1 is {Phi(phi,0,B,0)}, dimension 14") {
  // columns: action of each e7 basis element on underdot-1
  Matrix<GaussRat> m(14, 21);
  for (int k = 0; k < 21; ++k) {
    auto img = phi_action(E7Elem::basis(k), FreudElem::underdot1()).coords();
    for (int i = 0; i < 14; ++i) m(i, k) = img[i];
  }
  auto ker = kernel(m);
  CHECK(ker.size() == 14);
  for (const auto& v : ker) {
    std::array<GaussRat, 21> c;
    for (int i = 0; i < 21; ++i) c[i] = v[i];
    E7Elem f = E7Elem::from_coords(c);
    CHECK(f.a.is_zero());
    CHECK(f.nu.is_zero());
  }
}

TEST_CASE("jacobi identity on all 21^3 basis triples via the bracket table") {
  static std::array<std::array<std::array<GaussRat, 21>, 21>, 21> c;
  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j)
      c[i][j] = e7_bracket(E7Elem::basis(i), E7Elem::basis(j)).coords();

  auto bracket_with_basis = [&](int i, const std::array<GaussRat, 21>& v) {
    std::array<GaussRat, 21> out{};
    for (int m = 0; m < 21; ++m) {
      if (v[m].is_zero()) continue;
      for (int l = 0; l < 21; ++l)
        if (!c[i][m][l].is_zero()) out[l] += v[m] * c[i][m][l];
    }
    return out;
  };
  bool all_zero = true;
  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j)
      for (int k = 0; k < 21; ++k) {
        auto t1 = bracket_with_basis(i, c[j][k]);
        auto t2 = bracket_with_basis(j, c[k][i]);
        auto t3 = bracket_with_basis(k, c[i][j]);
        for (int l = 0; l < 21; ++l)
          if (!(t1[l] + t2[l] + t3[l]).is_zero()) all_zero = false;
      }
  CHECK(all_zero);
}

TEST_CASE("nilpotent exponential orbit formula") {
  CHECK(exp_nilpotent(Matrix<GaussRat>(5, 5)) == Matrix<GaussRat>::identity(5));
  CHECK_THROWS_AS(exp_nilpotent(Matrix<GaussRat>::identity(3)), NotNilpotent);

  std::mt19937 rng(23);
  for (int it = 0; it < 12; ++it) {
    JordanElem b = (it == 0) ? JordanElem::E(1) + JordanElem::E(2) : random_jordan(rng);
    Matrix<GaussRat> g = exp_nilpotent(E7Elem::from_b(b));
    std::vector<GaussRat> d1(14);
    d1[12] = GaussRat(1);
    auto img = g.apply(d1);
    std::array<GaussRat, 14> arr;
    for (int i = 0; i < 14; ++i) arr[i] = img[i];
    FreudElem r = FreudElem::from_coords(arr);
    JordanElem bxb = cross(b, b);
    CHECK(r.x == bxb);
    CHECK(r.y == b);
    CHECK(r.xi == GaussRat(1));
    CHECK(r.eta == third * inner(bxb, b));
    if (!r.is_zero()) CHECK(in_m(r));

    // fixes underdot-1
    std::vector<GaussRat> u1(14);
    u1[13] = GaussRat(1);
    CHECK(g.apply(u1) == u1);
  }
}

TEST_CASE("tau-lambda real form of e7 has real dimension 21") {
  auto sigma = [](const std::vector<GaussRat>& v) {
    std::array<GaussRat, 21> c;
    for (int i = 0; i < 21; ++i) c[i] = v[i];
    auto w = tau_e7(lambda_star_e7(E7Elem::from_coords(c))).coords();
    return std::vector<GaussRat>(w.begin(), w.end());
  };
  CHECK(fixed_subspace_dim_q(21, sigma) == 21);
}

TEST_CASE("transpose of phi = delta + T~ is -delta + T~ at the e6 level") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int it = 0; it < 6; ++it) {
    std::array<GaussRat, 8> c;
    for (auto& v : c) v = GaussRat(Rat(d(rng)), Rat(d(rng)));
    E6Elem phi = E6Elem::from_coords(c);
    E6Elem expect = phi;
    expect.delta = -expect.delta;
    CHECK(e6_decompose(e6_transpose_operator(phi)) == expect);
  }
}
