#include <doctest.h>

#include <random>

#include "tensordim/errors.hpp"
#include "tensordim/polynomial.hpp"

using namespace tensordim;

namespace {

const std::size_t kVars = 2;
Polynomial x() { return Polynomial::variable(kVars, 0); }
Polynomial y() { return Polynomial::variable(kVars, 1); }
Polynomial one() { return Polynomial::constant(kVars, 1); }

Polynomial random_poly(std::mt19937& rng, std::size_t vars) {
  Polynomial f(vars);
  int terms = static_cast<int>(rng() % 4);
  for (int t = 0; t <= terms; ++t) {
    std::vector<unsigned> e(vars);
    for (auto& v : e) v = rng() % 4;
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 4);
    f = f + Polynomial::term(Monomial(std::move(e)), Rational(num) / den);
  }
  return f;
}

}  // namespace

TEST_CASE("arithmetic identities") {
  Polynomial f = x() * x() - y();
  CHECK(f + Polynomial::zero(kVars) == f);
  CHECK((x() - y()) * (x() + y()) == x() * x() - y() * y());
  Polynomial sq = (x() + one()) * (x() + one());
  CHECK(sq == x() * x() + x() * Rational(2) + one());
  CHECK(sq.term_count() == 3);
  CHECK(sq.coefficient(Monomial({1, 0})) == 2);
}

TEST_CASE("zero coefficients are pruned") {
  Polynomial f = x() - x();
  CHECK(f.is_zero());
  CHECK(f.term_count() == 0);
  CHECK((x() * Rational(0)).is_zero());
}

TEST_CASE("arity mismatch is rejected") {
  Polynomial f(2), g(3);
  CHECK_THROWS_AS(f + g, DimensionMismatchError);
  CHECK_THROWS_AS(f * g, DimensionMismatchError);
}

TEST_CASE("leading terms") {
  MonomialOrder lex = MonomialOrder::lex(kVars);
  MonomialOrder grevlex = MonomialOrder::grevlex(kVars);

  auto [m1, c1] = (x() * x() - y()).leading_term(lex);
  CHECK(m1 == Monomial({2, 0}));
  CHECK(c1 == 1);

  auto [m2, c2] = (y() * Rational(3)).leading_term(grevlex);
  CHECK(m2 == Monomial({0, 1}));
  CHECK(c2 == 3);

  // x*y^2 + x^2*y: degree tie at 3, grevlex prefers x^2*y
  Polynomial f = x() * y() * y() + x() * x() * y();
  CHECK(f.leading_monomial(grevlex) == Monomial({2, 1}));

  CHECK_THROWS_AS(Polynomial::zero(kVars).leading_term(lex),
                  ZeroPolynomialError);
}

TEST_CASE("s-polynomials cancel leading terms") {
  MonomialOrder lex = MonomialOrder::lex(kVars);
  Polynomial f = x() - y();
  CHECK(s_polynomial(f, f, lex).is_zero());
  CHECK(s_polynomial(x(), y(), lex).is_zero());

  // S(x - y, y^2) = y^2 (x - y) - x y^2 = -y^3
  Polynomial s = s_polynomial(x() - y(), y() * y(), lex);
  CHECK(s == -(y() * y() * y()));

  CHECK_THROWS_AS(s_polynomial(Polynomial::zero(kVars), x(), lex),
                  ZeroPolynomialError);
}

TEST_CASE("rendering is canonical") {
  MonomialOrder grevlex = MonomialOrder::grevlex(kVars);
  Polynomial f = y() * y() - x() * x() * x();
  CHECK(to_string(f, {"x", "y"}, grevlex) == "-x^3 + y^2");
  CHECK(to_string(Polynomial::zero(kVars), {"x", "y"}, grevlex) == "0");
  CHECK(to_string(x() * (Rational(3) / 2) - one(), {"x", "y"}, grevlex) ==
        "3/2*x - 1");
}

TEST_CASE("ring axioms and order compatibility on random inputs") {
  std::mt19937 rng(98765);
  MonomialOrder grevlex = MonomialOrder::grevlex(3);
  MonomialOrder lex = MonomialOrder::lex(3);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = random_poly(rng, 3);
    Polynomial g = random_poly(rng, 3);
    Polynomial h = random_poly(rng, 3);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);

    // leading monomial of a product is the product of leading monomials
    for (const MonomialOrder& order : {grevlex, lex}) {
      if (!f.is_zero() && !g.is_zero()) {
        CHECK((f * g).leading_monomial(order) ==
              f.leading_monomial(order) * g.leading_monomial(order));
      }
    }

    // s-polynomial drops strictly below the pair lcm
    if (!f.is_zero() && !g.is_zero()) {
      Monomial lcm = Monomial::lcm(f.leading_monomial(grevlex),
                                   g.leading_monomial(grevlex));
      Polynomial s = s_polynomial(f, g, grevlex);
      if (!s.is_zero()) {
        CHECK(grevlex.less(s.leading_monomial(grevlex), lcm));
      }
    }
  }
}
