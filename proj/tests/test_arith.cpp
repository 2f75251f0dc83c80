#include <doctest.h>

#include "generators.hpp"
#include "symorb/combinatorics.hpp"
#include "symorb/field.hpp"

using namespace symorb;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("field specs parse and validate") {
  CHECK(FieldSpec::parse("Q") == Q);
  CHECK(FieldSpec::parse("F7").characteristic() == 7);
  CHECK(FieldSpec::parse("F2").to_string() == "F2");
  CHECK_THROWS_AS(FieldSpec::prime(4), DomainError);
  CHECK_THROWS_AS(FieldSpec::prime(1), DomainError);
  CHECK_THROWS_AS(FieldSpec::prime(1ull << 31), DomainError);
  CHECK_THROWS_AS(FieldSpec::parse("F"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
  CHECK(FieldSpec::prime(2147483647).characteristic() == 2147483647u);
}

TEST_CASE("trial division primality") {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 60; ++n) {
    if (is_prime(n)) primes.push_back(n);
  }
  CHECK(primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59});
  CHECK_FALSE(is_prime(65537ull * 65537ull));
}

TEST_CASE("rationals stay in lowest terms") {
  Scalar a(Q, 10, 12);
  CHECK(a.to_string() == "5/6");
  CHECK(Scalar(Q, 3, -6).to_string() == "-1/2");
  CHECK(Scalar(Q, -3L).to_string() == "-3");
  CHECK((a + Scalar(Q, 1, 6)).is_one());
  CHECK_THROWS_AS(Scalar(Q, 1, 0), DivisionByZero);
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), DivisionByZero);
  CHECK(Scalar(Q, 2, 3).inverse() == Scalar(Q, 3, 2));
}

TEST_CASE("prime field residues") {
  const FieldSpec F5 = FieldSpec::prime(5);
  CHECK(Scalar(F5, -1L).residue() == 4);
  CHECK(Scalar(F5, 3L).inverse().residue() == 2);
  CHECK(Scalar(F5, 1, 2).residue() == 3);
  CHECK_THROWS_AS(Scalar(F5, 1, 10), DivisionByZero);
  CHECK(Scalar(F5, 5L).is_zero());
  CHECK_THROWS_AS(Scalar(F5, 1L) + Scalar(Q, 1L), FieldMismatch);
  CHECK_THROWS_AS(Scalar(F5, 1L) + Scalar(FieldSpec::prime(7), 1L), FieldMismatch);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(reduce_mod(mpz_class(-13), 5) == 2);
}

TEST_CASE("field axioms on random triples") {
  testing::Gen gen(11);
  for (const FieldSpec field : {Q, FieldSpec::prime(5), FieldSpec::prime(2147483647)}) {
    for (int trial = 0; trial < 300; ++trial) {
      Scalar a = gen.scalar(field), b = gen.scalar(field), c = gen.scalar(field);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Scalar::zero(field));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("prime field arithmetic agrees with integer arithmetic reduced mod p") {
  testing::Gen gen(12);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 101ull, 65521ull}) {
    const FieldSpec Fp = FieldSpec::prime(p);
    for (int trial = 0; trial < 200; ++trial) {
      long x = gen.integer(-1000000, 1000000), y = gen.integer(-1000000, 1000000);
      mpz_class sum = mpz_class(x) + y, product = mpz_class(x) * y;
      CHECK((Scalar(Fp, x) + Scalar(Fp, y)).residue() == reduce_mod(sum, p));
      CHECK((Scalar(Fp, x) * Scalar(Fp, y)).residue() == reduce_mod(product, p));
      CHECK((Scalar(Fp, x) - Scalar(Fp, y)) == Scalar(Fp, mpz_class(mpz_class(x) - y)));
    }
  }
}

TEST_CASE("binomials and falling factorials") {
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == mpz_class("118264581564861424"));
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(5, 3) == 60);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(falling_factorial(-2, 2) == 6);
  for (unsigned long n = 1; n < 25; ++n) {
    for (unsigned long k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST_CASE("binomial identity holds on the full grid") {
  for (long n = 2; n <= 12; ++n) {
    for (long d = 1; d <= n - 1; ++d) {
      CHECK(lemma_identity_value(n, d, d) == Scalar(Q, binomial(n, d)));
      for (long a = 0; a < d; ++a) CHECK(lemma_identity_value(n, d, a).is_zero());
    }
  }
  CHECK_THROWS_AS(lemma_identity_value(3, 3, 1), DomainError);
  CHECK_THROWS_AS(lemma_identity_value(4, 2, 3), DomainError);
}

TEST_CASE("discrete derivative form vanishes") {
  for (unsigned long r = 1; r <= 8; ++r) {
    for (long s = 0; s <= 8; ++s) CHECK(discrete_derivative_sum(r, s) == 0);
  }
  // r-th difference of a degree r polynomial is r!, not zero
  mpz_class sum = 0;
  for (unsigned long j = 0; j <= 3; ++j) {
    mpz_class term = binomial(3, j) * falling_factorial(static_cast<long>(j) + 4, 3);
    sum += (j % 2 == 0) ? term : mpz_class(-term);
  }
  CHECK(abs(sum) == 6);
}

TEST_CASE("characteristic dividing a binomial") {
  CHECK_FALSE(char_divides_binomial(Q, 3, 2));
  CHECK(char_divides_binomial(FieldSpec::prime(3), 3, 2));
  CHECK_FALSE(char_divides_binomial(FieldSpec::prime(2), 3, 2));
  CHECK(char_divides_binomial(FieldSpec::prime(2), 4, 2));
}
