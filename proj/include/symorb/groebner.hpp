#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symorb/monomial.hpp"
#include "symorb/polynomial.hpp"

namespace symorb {

struct GroebnerOptions {
  /// Maximal number of S-pairs that may be reduced before BudgetExceeded.
  std::size_t max_pairs = 1'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Homogeneous input only: S-pairs whose lcm has larger degree are
  /// skipped, giving a basis that decides membership up to this degree.
  std::optional<unsigned> degree_bound;
  /// Return {1} as soon as a nonzero constant appears.
  bool stop_on_unit = true;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t pairs_skipped_by_degree = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced (monic, inter-reduced) Groebner basis, sorted by ascending
/// leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, FieldSpec field, std::size_t nvars, std::vector<Polynomial> basis,
                std::vector<Polynomial> sources, std::optional<unsigned> degree_bound,
                GroebnerStats stats);

  MonomialOrder order() const noexcept { return order_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  const std::vector<Polynomial>& source_generators() const noexcept { return sources_; }
  /// Set when the basis was truncated at a degree.
  std::optional<unsigned> degree_bound() const noexcept { return degree_bound_; }
  const GroebnerStats& stats() const noexcept { return stats_; }
  bool is_unit_ideal() const;

 private:
  MonomialOrder order_;
  FieldSpec field_;
  std::size_t nvars_;
  std::vector<Polynomial> basis_;
  std::vector<Polynomial> sources_;
  std::optional<unsigned> degree_bound_;
  GroebnerStats stats_;
};

Monomial leading_monomial(const Polynomial& f, MonomialOrder order);
Scalar leading_coefficient(const Polynomial& f, MonomialOrder order);

/// Buchberger's algorithm, normal selection strategy with the Gebauer-Moeller
/// pair criteria. Throws BudgetExceeded when the pair count or deadline is hit.
GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order,
                         const GroebnerOptions& options = {});

/// Fully reduced remainder of f modulo the basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

struct Division {
  /// quotients[i] multiplies basis()[i].
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum quotients[i] * basis[i] + remainder.
Division divide(const Polynomial& f, const GroebnerBasis& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

/// Direct check that every S-polynomial of the given polynomials reduces to
/// zero, computed with plain Polynomial arithmetic (independent of the
/// Buchberger engine).
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, MonomialOrder order);

/// f lies in the ideal generated by `generators`. Homogeneous input is
/// decided with a basis truncated at deg f.
bool ideal_member(const Polynomial& f, std::span<const Polynomial> generators,
                  MonomialOrder order = MonomialOrder::GrevLex, const GroebnerOptions& options = {});

/// f lies in the radical: 1 is in (generators, 1 - t f) with one fresh
/// variable t appended last.
bool radical_member(const Polynomial& f, std::span<const Polynomial> generators,
                    const GroebnerOptions& options = {});

/// The radical equals (x1, ..., xN): every variable is a radical member.
/// Requires homogeneous generators of positive degree.
bool radical_equals_irrelevant(std::span<const Polynomial> generators,
                               const GroebnerOptions& options = {});

}  // namespace symorb
