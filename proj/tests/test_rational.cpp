#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "exla/rational.hpp"

using namespace exla;

namespace {

// deterministic random scalars for the field-axiom sweeps
GaussRat random_gauss(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 9);
  return GaussRat(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("rat normalization and equality are structural") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(3, -6).denominator() == 2);
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat::parse("6/8") == Rat(3, 4));
  CHECK(Rat(3, 4).str() == "3/4");
  CHECK(Rat(5).str() == "5/1");
}

TEST_CASE("conjugation and norm identities") {
  GaussRat z(Rat(2), Rat(3));
  CHECK(z.conj() == GaussRat(Rat(2), Rat(-3)));
  CHECK(z.conj().conj() == z);

  GaussRat w = GaussRat(1, 1) * GaussRat(Rat(1), Rat(-1));
  CHECK(w == GaussRat(2));

  GaussRat inv = GaussRat(1) / GaussRat(Rat(1), Rat(1));
  CHECK(inv == GaussRat(Rat(1, 2), Rat(-1, 2)));
  CHECK(inv * GaussRat(Rat(1), Rat(1)) == GaussRat(1));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rat(1) / Rat(0), DivisionByZero);
  CHECK_THROWS_AS(GaussRat(1) / GaussRat(0), DivisionByZero);
  CHECK_THROWS_AS(Rat(1, 0), DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(12345);
  for (int it = 0; it < 200; ++it) {
    GaussRat a = random_gauss(rng), b = random_gauss(rng), c = random_gauss(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a * a.conj() == GaussRat(a.norm()));
  }
}

TEST_CASE("lexicographic order on (re, im)") {
  CHECK(lex_less(GaussRat(Rat(0), Rat(1)), GaussRat(1)));
  CHECK(lex_less(GaussRat(Rat(1), Rat(-1)), GaussRat(Rat(1), Rat(0))));
  CHECK_FALSE(lex_less(GaussRat(1), GaussRat(1)));
}
