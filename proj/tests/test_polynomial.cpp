#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "symorb/combinatorics.hpp"
#include "symorb/polynomial.hpp"

using namespace symorb;

namespace {
const FieldSpec Q = FieldSpec::rationals();

Polynomial P(const char* text, std::size_t nvars, FieldSpec field = Q) { return parse_polynomial(text, nvars, field); }
}  // namespace

TEST_CASE("monomial basics") {
  Monomial m{2, 0, 1};
  CHECK(m.degree() == 3);
  CHECK(m.to_string() == "x1^2*x3");
  CHECK(Monomial(3).to_string() == "1");
  CHECK(m.support_size() == 2);
  CHECK_FALSE(m.is_squarefree());
  CHECK(Monomial({1, 0, 1}).divides(m));
  CHECK_FALSE(Monomial({0, 1, 0}).divides(m));
  CHECK(m / Monomial({1, 0, 1}) == Monomial({1, 0, 0}));
  CHECK(lcm(m, Monomial({0, 3, 0})) == Monomial({2, 3, 1}));
  CHECK(Monomial::variable(4, 2) == Monomial({0, 1, 0, 0}));
  CHECK(m.embed(5).nvars() == 5);
}

TEST_CASE("lex and grevlex comparisons") {
  Monomial a{1, 0, 2}, b{0, 3, 0};
  CHECK(compare(MonomialOrder::Lex, a, b) > 0);
  CHECK(compare(MonomialOrder::GrevLex, a, b) < 0);
  // grevlex compares degree first
  CHECK(compare(MonomialOrder::GrevLex, Monomial{0, 0, 3}, Monomial{1, 1, 0}) > 0);
  CHECK(compare(MonomialOrder::Lex, Monomial{0, 0, 3}, Monomial{1, 1, 0}) < 0);
  CHECK(compare(MonomialOrder::GrevLex, Monomial{1, 1, 0}, Monomial{1, 0, 1}) > 0);
  CHECK(compare(MonomialOrder::Lex, a, a) == 0);
  CHECK(parse_monomial_order("lex") == MonomialOrder::Lex);
  CHECK(parse_monomial_order("grevlex") == MonomialOrder::GrevLex);
  CHECK_THROWS_AS(parse_monomial_order("deglex"), Error);
}

TEST_CASE("monomial orders are multiplicative total orders") {
  testing::Gen gen(21);
  for (MonomialOrder order : {MonomialOrder::Lex, MonomialOrder::GrevLex}) {
    for (int trial = 0; trial < 400; ++trial) {
      Monomial a = gen.monomial(5, 6), b = gen.monomial(5, 6), c = gen.monomial(5, 6);
      auto ab = compare(order, a, b);
      CHECK(compare(order, b, a) == (0 <=> ab));
      CHECK(compare(order, a * c, b * c) == ab);
      CHECK(compare(order, a * c, a) >= 0);
      if (ab < 0 && compare(order, b, c) < 0) CHECK(compare(order, a, c) < 0);
    }
  }
}

TEST_CASE("monomials of a degree") {
  auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  CHECK(ms.front() == Monomial({2, 0, 0}));
  CHECK(ms.back() == Monomial({0, 0, 2}));
  CHECK(std::is_sorted(ms.rbegin(), ms.rend()));
  CHECK(monomials_of_degree(5, 4).size() == binomial(8, 4));
}

TEST_CASE("parsing and formatting") {
  Polynomial f = P("x1^2*x2 - 3*x2*x3 + 1/2", 3);
  CHECK(f.size() == 3);
  CHECK(format_polynomial(f, MonomialOrder::Lex) == "x1^2*x2 - 3*x2*x3 + 1/2");
  CHECK(format_polynomial(P("x3 + x1", 3), MonomialOrder::Lex) == "x1 + x3");
  CHECK(format_polynomial(P("-x1", 2)) == "-x1");
  CHECK(format_polynomial(Polynomial(Q, 2)) == "0");
  CHECK(P("2 x1 x2", 2) == P("2*x1*x2", 2));
  CHECK(P("x1 + x1", 1) == P("2*x1", 1));
  CHECK(P("x1 - x1", 1).is_zero());
  CHECK_THROWS_AS(P("x4", 3), ParseError);
  CHECK_THROWS_AS(P("x1 +", 3), ParseError);
  CHECK_THROWS_AS(P("x0", 3), ParseError);
  CHECK_THROWS_AS(P("y1", 3), ParseError);
  CHECK_THROWS_AS(P("1/0", 3), Error);
  CHECK(P("x1 + 6", 1, FieldSpec::prime(5)) == P("x1 + 1", 1, FieldSpec::prime(5)));
}

TEST_CASE("parse and format round trip") {
  testing::Gen gen(22);
  for (const FieldSpec field : {Q, FieldSpec::prime(7)}) {
    for (int trial = 0; trial < 300; ++trial) {
      Polynomial f = gen.polynomial(field, 4, 5, 6);
      for (MonomialOrder order : {MonomialOrder::Lex, MonomialOrder::GrevLex}) {
        CHECK(parse_polynomial(format_polynomial(f, order), 4, field) == f);
      }
    }
  }
}

TEST_CASE("primitive parts") {
  Polynomial f = P("1/2*x1 - 3/4*x2", 2);
  CHECK(format_primitive(f, MonomialOrder::Lex) == "2*x1 - 3*x2");
  CHECK(format_primitive(-f, MonomialOrder::Lex) == "2*x1 - 3*x2");
  CHECK(format_primitive(P("3*x1 + 2", 1, FieldSpec::prime(5))) == "x1 + 4");
}

TEST_CASE("ring operations") {
  Polynomial a = P("x1 + x2", 2), b = P("x1 - x2", 2);
  CHECK(a * b == P("x1^2 - x2^2", 2));
  CHECK(a.pow(3) == P("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3", 2));
  CHECK(a.pow(0) == Polynomial::constant(Q, 2, Scalar::one(Q)));
  CHECK(a.mul_term(Monomial{1, 0}, Scalar(Q, 2L)) == P("2*x1^2 + 2*x1*x2", 2));
  CHECK_THROWS_AS(a + P("x1", 3), FieldMismatch);
  CHECK_THROWS_AS(a + P("x1", 2, FieldSpec::prime(3)), FieldMismatch);
  CHECK(P("x1^2 + x2", 2).homogeneous_part(2) == P("x1^2", 2));
  CHECK(P("x1^3*x2 + x2", 2).total_degree() == 4u);
  CHECK(P("x1^3*x2 + x2", 2).min_degree() == 1u);
  CHECK_FALSE(Polynomial(Q, 2).total_degree().has_value());
  CHECK(P("x2", 5).used_variables() == 2);
  CHECK(P("x1*x2 + x3^2", 3).is_homogeneous());
  CHECK_FALSE(P("x1*x2 + x3", 3).is_homogeneous());
}

TEST_CASE("ring axioms on random polynomials") {
  testing::Gen gen(23);
  for (const FieldSpec field : {Q, FieldSpec::prime(3)}) {
    for (int trial = 0; trial < 60; ++trial) {
      Polynomial f = gen.polynomial(field, 3, 3, 4), g = gen.polynomial(field, 3, 3, 4),
                 h = gen.polynomial(field, 3, 3, 4);
      CHECK(f * g == g * f);
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK((f - g) + g == f);
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  testing::Gen gen(24);
  for (const FieldSpec field : {Q, FieldSpec::prime(5)}) {
    for (int trial = 0; trial < 200; ++trial) {
      Polynomial f = gen.polynomial(field, 4, 4, 5), g = gen.polynomial(field, 4, 4, 5);
      auto p = gen.point(field, 4);
      CHECK(evaluate(f * g, p) == evaluate(f, p) * evaluate(g, p));
      CHECK(evaluate(f + g, p) == evaluate(f, p) + evaluate(g, p));
    }
  }
  CHECK_THROWS_AS(evaluate(P("x1", 2), std::vector<Scalar>{Scalar::one(Q)}), Error);
}

TEST_CASE("elementary symmetric polynomials") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (unsigned d = 0; d <= n; ++d) {
      Polynomial e = elementary_symmetric(n + 1, n, d, Q);
      CHECK(e.size() == binomial(n, d));
      for (const auto& t : e.terms()) {
        CHECK(t.coefficient.is_one());
        CHECK(t.monomial.is_squarefree());
        CHECK(t.monomial.degree() == d);
        CHECK(t.monomial[n] == 0);
      }
    }
  }
  CHECK(elementary_symmetric(3, 3, 2, Q) == P("x1*x2 + x1*x3 + x2*x3", 3));
  std::vector<std::size_t> subset{2, 4, 5};
  CHECK(elementary_symmetric(5, subset, 2, Q) == P("x2*x4 + x2*x5 + x4*x5", 5));
}

TEST_CASE("monomial types") {
  CHECK(monomial_type(Monomial{2, 1, 0}) == Partition{2, 1});
  CHECK(monomial_type(Monomial{1, 1, 1}) == Partition{1, 1, 1});
  CHECK(monomial_type(Monomial(3)).empty());
  CHECK(to_string(Partition{2, 1}) == "(2,1)");
}

TEST_CASE("same type iff a permutation of exponents") {
  testing::Gen gen(25);
  for (int trial = 0; trial < 500; ++trial) {
    Monomial a = gen.monomial(4, 4), b = gen.monomial(4, 4);
    if (gen.coin(0.3)) {
      std::vector<unsigned> e(a.exponents().begin(), a.exponents().end());
      std::shuffle(e.begin(), e.end(), gen.engine());
      b = Monomial::from_exponents(e);
    }
    std::vector<unsigned> ea(a.exponents().begin(), a.exponents().end());
    std::vector<unsigned> eb(b.exponents().begin(), b.exponents().end());
    bool permuted = std::is_permutation(ea.begin(), ea.end(), eb.begin());
    CHECK((monomial_type(a) == monomial_type(b)) == permuted);
  }
}

TEST_CASE("support sets") {
  CHECK_THROWS_AS(SupportSet::of(Polynomial(Q, 3)), DomainError);
  SupportSet s = SupportSet::of(P("x1^3 + x1*x2*x3", 3));
  REQUIRE(s.size() == 2);
  auto a = analyze_support(s);
  CHECK(a.homogeneous);
  CHECK(a.degree == 3u);
  CHECK(a.contains_variable_power);
  CHECK(a.k_min_positive == 1);
  CHECK_FALSE(a.squarefree);
  CHECK_FALSE(a.symmetric);
  CHECK(a.types.size() == 2);

  auto b = analyze_support(SupportSet::of(P("x1*x2 + x1*x3 + x2*x3", 3)));
  CHECK(b.squarefree);
  CHECK(b.symmetric);
  CHECK(b.k_min_positive == 2);
  CHECK_FALSE(b.contains_variable_power);

  std::vector<Scalar> coefficients{Scalar(Q, 2L), Scalar(Q, 5L)};
  Polynomial f = s.with_coefficients(coefficients);
  CHECK(f.coefficient(s.elements()[0]) == Scalar(Q, 2L));
  CHECK(f.coefficient(s.elements()[1]) == Scalar(Q, 5L));
}
