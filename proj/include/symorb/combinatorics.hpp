#pragma once

#include <gmpxx.h>

#include "symorb/field.hpp"

namespace symorb {

/// C(n, k), zero when k > n.
mpz_class binomial(unsigned long n, unsigned long k);

/// s (s-1) ... (s-r+1); the empty product is 1.
mpz_class falling_factorial(long s, unsigned long r);

/// Exact value of
///   C(n-1,d) * sum_{j=0}^{d} (-1)^j C(d-a,j) C(n-d+a,d-j) / C(n-1,d-j)
/// over Q, for 1 <= d <= n-1 and 0 <= a <= d. It equals C(n,d) when a = d and
/// vanishes otherwise.
Scalar lemma_identity_value(long n, long d, long a);

/// The discrete-derivative form of the same identity:
///   sum_{j=0}^{r} (-1)^j C(r,j) falling_factorial(s+j, r-1).
mpz_class discrete_derivative_sum(unsigned long r, long s);

/// True iff the characteristic is positive and divides C(n, d).
bool char_divides_binomial(const FieldSpec& field, unsigned long n, unsigned long d);

}  // namespace symorb
