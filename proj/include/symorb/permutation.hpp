#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symorb/monomial.hpp"
#include "symorb/polynomial.hpp"

namespace symorb {

/// A bijection on {1..N}. Indices are 1-based at the interface.
class Permutation {
 public:
  static Permutation identity(std::size_t degree);
  /// images[i-1] = sigma(i); throws DomainError unless a bijection.
  static Permutation from_images(std::span<const std::size_t> images);
  static Permutation cycle(std::size_t degree, std::span<const std::size_t> points);
  static Permutation transposition(std::size_t degree, std::size_t i, std::size_t j);
  /// Cycle notation such as "(1 2)(3 4)"; "()" is the identity. Cycles may
  /// separate points by spaces or commas.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i - 1) + 1u; }
  bool is_identity() const noexcept;

  /// Composition: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;  // 0-based
};

/// sigma.x_i = x_sigma(i): exponent at position sigma(i) of the image equals
/// the exponent at position i of the input.
Monomial act(const Permutation& sigma, const Monomial& m);
Polynomial act(const Permutation& sigma, const Polynomial& f);

inline constexpr std::size_t kDefaultGroupBound = 50'000;

/// A permutation group with every element enumerated.
class PermGroup {
 public:
  enum class Kind { Symmetric, Cyclic, Generated };

  static PermGroup symmetric(std::size_t degree, std::size_t bound = kDefaultGroupBound);
  /// Generated by the cycle (1 2 ... N).
  static PermGroup cyclic(std::size_t degree, std::size_t bound = kDefaultGroupBound);
  static PermGroup generated(std::size_t degree, std::vector<Permutation> generators,
                             std::size_t bound = kDefaultGroupBound);
  /// "S5", "C4", or "gens:(1 2),(1 2 3)" (degree taken from the argument).
  static PermGroup parse(std::string_view text, std::size_t degree_hint = 0,
                         std::size_t bound = kDefaultGroupBound);

  Kind kind() const noexcept { return kind_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Sorted ascending; the identity comes first.
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(const Permutation& p) const;
  std::string descriptor() const;

 private:
  PermGroup(Kind kind, std::size_t degree, std::vector<Permutation> generators, std::size_t bound);

  Kind kind_;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// The deduplicated orbit {sigma.f}, in canonical polynomial order.
std::vector<Polynomial> orbit(const Polynomial& f, const PermGroup& group);
/// Orbit of f under S_N via injective images of the variables f actually
/// uses; equal to orbit(f, PermGroup::symmetric(N)) without enumerating S_N.
std::vector<Polynomial> symmetric_orbit(const Polynomial& f);
std::vector<Monomial> orbit(const Monomial& m, const PermGroup& group);

/// Elements fixing f.
std::vector<Permutation> stabilizer(const Polynomial& f, const PermGroup& group);

bool transitive_on_variables(const PermGroup& group);
/// All monomials of the given type in nvars variables, ascending lex.
std::vector<Monomial> monomials_of_type(const Partition& type, std::size_t nvars);
bool transitive_on_type(const PermGroup& group, const Partition& type);

}  // namespace symorb
