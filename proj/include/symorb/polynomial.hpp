#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symorb/field.hpp"
#include "symorb/monomial.hpp"

namespace symorb {

/// Sparse polynomial over a fixed field and variable count. Terms are kept
/// with nonzero coefficients in descending lex order of their monomials,
/// which makes equality and the canonical ordering structural.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Scalar coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  /// The zero polynomial.
  Polynomial(FieldSpec field, std::size_t nvars);

  static Polynomial constant(FieldSpec field, std::size_t nvars, const Scalar& c);
  static Polynomial term(FieldSpec field, const Monomial& m, const Scalar& c);
  static Polynomial monomial(FieldSpec field, const Monomial& m);
  /// x_i, 1-based.
  static Polynomial variable(FieldSpec field, std::size_t nvars, std::size_t i);
  /// Combines duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(FieldSpec field, std::size_t nvars, std::vector<Term> terms);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_homogeneous() const noexcept;
  /// Maximal / minimal total degree; nullopt for the zero polynomial.
  std::optional<unsigned> total_degree() const noexcept;
  std::optional<unsigned> min_degree() const noexcept;
  /// Highest variable index (1-based) that occurs, 0 for constants.
  std::size_t used_variables() const noexcept;

  Scalar coefficient(const Monomial& m) const;
  std::vector<Monomial> support() const;

  /// Sum of the homogeneous components of degree `degree`.
  Polynomial homogeneous_part(unsigned degree) const;
  /// Same polynomial in a ring with more variables.
  Polynomial embed(std::size_t nvars) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Canonical order: by term sequence, then coefficient.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;

  FieldSpec field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Exact evaluation at a point of length nvars.
Scalar evaluate(const Polynomial& f, std::span<const Scalar> point);

/// The sum of all square-free degree-d monomials in the variables indexed by
/// `subset` (1-based), inside a ring with nvars variables. d = 0 gives 1.
Polynomial elementary_symmetric(std::size_t nvars, std::span<const std::size_t> subset, unsigned d,
                                FieldSpec field);
/// e_n^d(x1, ..., xn) inside a ring with nvars >= n variables.
Polynomial elementary_symmetric(std::size_t nvars, std::size_t n, unsigned d, FieldSpec field);

/// Parses the term grammar `[coeff][*][x<i>[^<e>]]*` joined by + and -.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars, FieldSpec field);
/// Terms in descending `order`, signs absorbed into the separators.
std::string format_polynomial(const Polynomial& f, MonomialOrder order = MonomialOrder::GrevLex);
/// Over Q: scales f to coprime integer coefficients with positive leading
/// coefficient (in `order`) before formatting. Prime fields format monic.
std::string format_primitive(const Polynomial& f, MonomialOrder order = MonomialOrder::GrevLex);
/// Scalar multiple of f used by format_primitive.
Polynomial primitive_part(const Polynomial& f, MonomialOrder order);

using Partition = std::vector<unsigned>;

/// Exponents sorted in decreasing order with zeros dropped.
Partition monomial_type(const Monomial& m);
std::string to_string(const Partition& p);

/// Non-empty finite set of exponent vectors over a common variable count.
class SupportSet {
 public:
  SupportSet(std::size_t nvars, std::vector<Monomial> elements);
  /// Throws DomainError for the zero polynomial.
  static SupportSet of(const Polynomial& f);

  std::size_t nvars() const noexcept { return nvars_; }
  /// Sorted ascending (lex), without duplicates.
  const std::vector<Monomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Polynomial with the given coefficients, aligned with elements().
  Polynomial with_coefficients(std::span<const Scalar> coefficients) const;

 private:
  std::size_t nvars_;
  std::vector<Monomial> elements_;
};

struct SupportAnalysis {
  bool homogeneous = false;
  std::optional<unsigned> degree;
  /// Minimal number of strictly positive exponents over the elements.
  std::size_t k_min_positive = 0;
  bool squarefree = false;
  /// Closed under all coordinate permutations.
  bool symmetric = false;
  /// Some element is a pure power of one variable.
  bool contains_variable_power = false;
  std::set<Partition> types;
};

SupportAnalysis analyze_support(const SupportSet& support);

}  // namespace symorb
