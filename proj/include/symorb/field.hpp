#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "symorb/errors.hpp"

namespace symorb {

/// The coefficient field: the rationals or a prime field F_p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws DomainError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "F<p>".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element tagged with its field. Rationals are kept in
/// lowest terms with positive denominator, residues in [0, p).
class Scalar {
 public:
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpz_class& value);
  /// num/den; throws DivisionByZero if den vanishes in the field.
  Scalar(FieldSpec field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(FieldSpec field) { return Scalar(field, 0L); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1L); }
  static Scalar from_residue(FieldSpec field, std::uint64_t residue);
  static Scalar from_rational(const mpq_class& q);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Only valid over the rationals.
  const mpq_class& rational() const;
  /// Only valid over a prime field.
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Canonical total order within one field, used for deterministic sorting.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// "5/6", "-3", or the residue for prime fields.
  std::string to_string() const;

 private:
  Scalar(FieldSpec field, std::variant<mpq_class, std::uint64_t> value)
      : field_(field), value_(std::move(value)) {}

  void check_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

/// Reduces an integer into [0, p).
std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

}  // namespace symorb
