#include "doctest.h"

#include "satake/core/error.hpp"
#include "satake/core/laurent.hpp"
#include "satake/core/numeric.hpp"

#include <random>

using namespace satake;

TEST_SUITE("core") {

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational(" -7/14 ") == Rational(-1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-1.5") == Rational(-3, 2));
  CHECK(parse_rational("\"5\"") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("laurent arithmetic against pointwise evaluation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), expo(-6, 6), len(0, 4);
  auto rnd = [&] {
    LaurentPoly p;
    int n = len(rng);
    for (int k = 0; k < n; ++k) p += LaurentPoly::monomial_q(expo(rng), coef(rng));
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = rnd(), b = rnd();
    for (int q : {2, 3, -2}) {
      Rational x = a.eval_q(q), y = b.eval_q(q);
      CHECK((a + b).eval_q(q) == x + y);
      CHECK((a - b).eval_q(q) == x - y);
      CHECK((a * b).eval_q(q) == x * y);
    }
    for (int e = -6; e <= 6; ++e) CHECK(a.invert_variable().coeff_q(e) == a.coeff_q(-e));
    CHECK(a.invert_variable().invert_variable() == a);
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("laurent printing round-trips") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9), expo(-8, 8);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly p;
    for (int k = 0; k < 4; ++k) p += LaurentPoly::monomial_v(expo(rng), coef(rng));
    CHECK(LaurentPoly::parse(p.to_string()) == p);
  }
  CHECK(LaurentPoly::parse("q^5-q").to_string() == "-q+q^5");
  CHECK(LaurentPoly::parse("q^(1/2)") == LaurentPoly::monomial_v(1));
  CHECK(LaurentPoly::parse("2*q^{-3}") == LaurentPoly::monomial_q(-3, 2));
  CHECK_THROWS_AS(LaurentPoly::parse("q^1/2"), ParseError);
  CHECK_THROWS_AS(LaurentPoly::parse("q q"), ParseError);
}

TEST_CASE("sparse json form") {
  LaurentPoly p = LaurentPoly::parse("3 - q + q^4");
  CHECK(p.to_json_sparse() == "{\"0\":3,\"2\":-1,\"8\":1}");
  CHECK(LaurentPoly::from_sparse(p.terms_v()) == p);
}

TEST_CASE("large coefficients stay exact") {
  LaurentPoly p = LaurentPoly::parse("1+q");
  LaurentPoly r(1);
  for (int k = 0; k < 80; ++k) r *= p;
  // binomial(80, 40)
  CHECK(r.coeff_q(40).str() == "107507208733336176461620");
  CHECK(r.eval_q(1) == Rational(BigInt(1) << 80));
}

TEST_CASE("hermite normal form and lattice membership") {
  IMat m{{2, 4, 6}, {1, 1, 1}, {3, 5, 7}};
  IMat h = hermite_normal_form(m);
  CHECK(h.size() == 2);
  CHECK(in_row_lattice(h, {1, 1, 1}));
  CHECK(in_row_lattice(h, {0, 2, 4}));
  CHECK_FALSE(in_row_lattice(h, {0, 1, 2}));
  CHECK_FALSE(in_row_lattice(h, {1, 0, 0}));
}

TEST_CASE("integer relations among rows") {
  std::vector<RVec> rows{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}, {Rational(1), Rational(0)}, {Rational(1, 2), Rational(1)}};
  IMat k = integer_kernel(rows);
  REQUIRE(k.size() == 2);
  for (const auto& y : k) {
    RVec s(2, Rational(0));
    for (size_t i = 0; i < rows.size(); ++i) s = s + Rational(y[i]) * rows[i];
    CHECK(is_zero(s));
  }
  // Saturated: (0,1,0,-4) is the primitive relation between rows 2 and 4.
  IMat h = hermite_normal_form(k);
  CHECK(in_row_lattice(h, {2, -1, 0, 0}));
  CHECK(in_row_lattice(h, {0, 1, 0, -4}));
  CHECK_FALSE(in_row_lattice(h, {1, 0, 0, 0}));
}

TEST_CASE("rational matrix inverse") {
  RMat m{{Rational(2), Rational(1)}, {Rational(5), Rational(3)}};
  RMat p = mat_mul(m, inverse(m));
  CHECK(p == identity_rmat(2));
  CHECK_THROWS_AS(inverse(RMat{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}), DomainError);
}

}
