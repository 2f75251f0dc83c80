#include "symorb/field.hpp"

#include <cctype>
#include <charconv>

namespace symorb {

namespace {
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxModulus) throw DomainError("modulus " + std::to_string(p) + " too large");
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc{} && ptr == text.data() + text.size()) return prime(p);
  }
  throw DomainError("unknown field '" + std::string(text) + "' (expected Q or F<p>)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on signed values; p < 2^31 keeps everything in range
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  if (new_r == 0) throw DivisionByZero("inverse of zero in F" + std::to_string(p));
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Scalar::Scalar(FieldSpec field, long value) : Scalar(field, mpz_class(value)) {}

Scalar::Scalar(FieldSpec field, const mpz_class& value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce_mod(value, field.characteristic());
  }
}

Scalar::Scalar(FieldSpec field, const mpz_class& num, const mpz_class& den) : field_(field) {
  if (field.is_rational()) {
    if (den == 0) throw DivisionByZero("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    const std::uint64_t p = field.characteristic();
    const std::uint64_t d = reduce_mod(den, p);
    if (d == 0) {
      throw DivisionByZero("denominator " + den.get_str() + " vanishes in " + field.to_string());
    }
    value_ = reduce_mod(num, p) * inverse_mod(d, p) % p;
  }
}

Scalar Scalar::from_residue(FieldSpec field, std::uint64_t residue) {
  if (!field.is_prime_field()) throw FieldMismatch("residue given for a non-prime field");
  return Scalar(field, std::variant<mpq_class, std::uint64_t>(residue % field.characteristic()));
}

Scalar Scalar::from_rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return Scalar(FieldSpec::rationals(), std::variant<mpq_class, std::uint64_t>(std::move(c)));
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("rational value requested from " + field_.to_string());
}

std::uint64_t Scalar::residue() const {
  if (auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw FieldMismatch("residue requested from Q");
}

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("field mismatch: " + field_.to_string() + " vs " + other.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    mpq_class r = 1 / *q;
    r.canonicalize();
    return Scalar(field_, std::variant<mpq_class, std::uint64_t>(std::move(r)));
  }
  const std::uint64_t p = field_.characteristic();
  return Scalar(field_, std::variant<mpq_class, std::uint64_t>(
                            inverse_mod(std::get<std::uint64_t>(value_), p)));
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    return Scalar(field_, std::variant<mpq_class, std::uint64_t>(mpq_class(-*q)));
  }
  const std::uint64_t p = field_.characteristic();
  const std::uint64_t r = std::get<std::uint64_t>(value_);
  return Scalar(field_, std::variant<mpq_class, std::uint64_t>(r == 0 ? 0 : p - r));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + std::get<std::uint64_t>(rhs.value_)) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q -= std::get<mpq_class>(rhs.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint64_t>(value_);
    r = (r + p - std::get<std::uint64_t>(rhs.value_)) % p;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& r = std::get<std::uint64_t>(value_);
    r = r * std::get<std::uint64_t>(rhs.value_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (auto* q = std::get_if<mpq_class>(&a.value_)) {
    const int c = cmp(*q, std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return std::get<std::uint64_t>(a.value_) <=> std::get<std::uint64_t>(b.value_);
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace symorb
