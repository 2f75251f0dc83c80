#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace symorb {

inline constexpr std::size_t kMaxVars = 24;

/// Exponent vector of fixed length nvars, stored inline. Entries past nvars
/// are always zero, so the array comparison is the lexicographic order with
/// x1 > x2 > ... > xN.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  /// The unit monomial in nvars variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  /// x_i (1-based) in nvars variables.
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  std::span<const Exponent> exponents() const noexcept { return {exp_.data(), nvars_}; }

  /// Number of strictly positive exponents.
  std::size_t support_size() const noexcept;
  bool is_squarefree() const noexcept;
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  /// Copy with more trailing variables (exponent zero).
  Monomial embed(std::size_t nvars) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (auto c = a.exp_ <=> b.exp_; c != 0) return c;
    return a.nvars_ <=> b.nvars_;
  }

  std::size_t hash() const noexcept;
  /// "x1^2*x3", or "1" for the unit monomial.
  std::string to_string() const;

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

enum class MonomialOrder { Lex, GrevLex };

std::string to_string(MonomialOrder order);
MonomialOrder parse_monomial_order(const std::string& text);

/// Three-way comparison under the given order, x1 > x2 > ... > xN.
std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept;

/// All monomials of total degree exactly `degree`, in descending lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace symorb

template <>
struct std::hash<symorb::Monomial> {
  std::size_t operator()(const symorb::Monomial& m) const noexcept { return m.hash(); }
};
