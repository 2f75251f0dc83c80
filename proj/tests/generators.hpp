#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "symorb/field.hpp"
#include "symorb/monomial.hpp"
#include "symorb/permutation.hpp"
#include "symorb/polynomial.hpp"

namespace symorb::testing {

// Small seeded generators for property tests. Every draw goes through one
// engine so a failing case is reproducible from the seed alone.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  long nonzero(long bound) {
    long v = integer(-bound, bound - 1);
    return v >= 0 ? v + 1 : v;
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Scalar scalar(const FieldSpec& field, long bound = 20) {
    if (field.is_prime_field() || coin(0.6)) return Scalar(field, integer(-bound, bound));
    return Scalar(field, mpz_class(integer(-bound, bound)), mpz_class(integer(1, bound)));
  }

  Monomial monomial(std::size_t nvars, unsigned max_degree) {
    Monomial m(nvars);
    unsigned budget = static_cast<unsigned>(integer(0, max_degree));
    for (unsigned k = 0; k < budget; ++k) {
      std::size_t i = static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1));
      m.set(i, m[i] + 1);
    }
    return m;
  }

  Monomial monomial_of_degree(std::size_t nvars, unsigned degree) {
    Monomial m(nvars);
    for (unsigned k = 0; k < degree; ++k) {
      std::size_t i = static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1));
      m.set(i, m[i] + 1);
    }
    return m;
  }

  Polynomial polynomial(const FieldSpec& field, std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
    std::vector<Polynomial::Term> terms;
    std::size_t count = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
    for (std::size_t k = 0; k < count; ++k) terms.push_back({monomial(nvars, max_degree), scalar(field)});
    return Polynomial::from_terms(field, nvars, std::move(terms));
  }

  Polynomial homogeneous(const FieldSpec& field, std::size_t nvars, unsigned degree, std::size_t max_terms,
                         long bound = 5) {
    std::vector<Polynomial::Term> terms;
    std::size_t count = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
    for (std::size_t k = 0; k < count; ++k) {
      terms.push_back({monomial_of_degree(nvars, degree), Scalar(field, nonzero(bound))});
    }
    return Polynomial::from_terms(field, nvars, std::move(terms));
  }

  Permutation permutation(std::size_t degree) {
    std::vector<std::size_t> images(degree);
    for (std::size_t i = 0; i < degree; ++i) images[i] = i + 1;
    std::shuffle(images.begin(), images.end(), rng_);
    return Permutation::from_images(images);
  }

  std::vector<Scalar> point(const FieldSpec& field, std::size_t nvars, long bound = 6) {
    std::vector<Scalar> p;
    for (std::size_t i = 0; i < nvars; ++i) p.push_back(scalar(field, bound));
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace symorb::testing
