#include "symorb/combinatorics.hpp"

#include <string>

namespace symorb {

mpz_class binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  // multiplicative formula; each partial product is itself a binomial, so the
  // division is exact
  mpz_class result = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    result *= n - k + i;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
  }
  return result;
}

mpz_class falling_factorial(long s, unsigned long r) {
  mpz_class result = 1;
  for (unsigned long i = 0; i < r; ++i) {
    result *= mpz_class(s) - mpz_class(static_cast<long>(i));
  }
  return result;
}

Scalar lemma_identity_value(long n, long d, long a) {
  if (d < 1 || d > n - 1) {
    throw DomainError("lemma identity needs 1 <= d <= n-1 (n=" + std::to_string(n) +
                      ", d=" + std::to_string(d) + ")");
  }
  if (a < 0 || a > d) throw DomainError("lemma identity needs 0 <= a <= d");
  const auto un = static_cast<unsigned long>(n);
  const auto ud = static_cast<unsigned long>(d);
  const auto ua = static_cast<unsigned long>(a);
  mpq_class sum = 0;
  for (unsigned long j = 0; j <= ud; ++j) {
    mpq_class term(binomial(ud - ua, j) * binomial(un - ud + ua, ud - j), binomial(un - 1, ud - j));
    term.canonicalize();
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return Scalar::from_rational(sum * binomial(un - 1, ud));
}

mpz_class discrete_derivative_sum(unsigned long r, long s) {
  if (r == 0) throw DomainError("discrete derivative form needs r >= 1");
  mpz_class sum = 0;
  for (unsigned long j = 0; j <= r; ++j) {
    mpz_class term = binomial(r, j) * falling_factorial(s + static_cast<long>(j), r - 1);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

bool char_divides_binomial(const FieldSpec& field, unsigned long n, unsigned long d) {
  if (field.is_rational()) return false;
  if (d > n) throw DomainError("char_divides_binomial needs d <= n");
  return reduce_mod(binomial(n, d), field.characteristic()) == 0;
}

}  // namespace symorb
