#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symorb/groebner.hpp"
#include "symorb/matrix.hpp"
#include "symorb/permutation.hpp"
#include "symorb/polynomial.hpp"
#include "symorb/report.hpp"

namespace symorb {

/// The ideal generated by the G-orbits of the seeds.
class OrbitIdeal {
 public:
  OrbitIdeal(std::vector<Polynomial> seeds, PermGroup group);

  const PermGroup& group() const noexcept { return group_; }
  const std::vector<Polynomial>& seeds() const noexcept { return seeds_; }
  /// All sigma.f, deduplicated, in canonical polynomial order.
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const FieldSpec& field() const noexcept { return seeds_.front().field(); }
  std::size_t nvars() const noexcept { return group_.degree(); }
  bool homogeneous() const;
  /// "(S5.x1*x2 + x1*x3 + x2*x3)".
  std::string descriptor() const;

 private:
  std::vector<Polynomial> seeds_;
  PermGroup group_;
  std::vector<Polynomial> generators_;
};

/// Columns u*g for every generator g and monomial multiplier u.
struct GradedPiece {
  unsigned degree = 0;
  std::vector<Monomial> monomial_index;
  ExactMatrix basis_matrix;
  struct Column {
    std::size_t generator;
    Monomial multiplier;
  };
  std::vector<Column> columns;
};

/// Degree-e piece of a homogeneous orbit ideal; rows are all degree-e
/// monomials in descending lex order.
GradedPiece graded_piece(const OrbitIdeal& ideal, unsigned degree);

/// Membership of a homogeneous polynomial by linear algebra in one graded
/// piece. Inhomogeneous seeds use multipliers of degree <= deg m - mindeg g,
/// which is sound but only complete up to that head-room.
VerdictReport graded_member(const Polynomial& m, const OrbitIdeal& ideal);

/// Groebner-basis comparison of two ideals given by generators.
VerdictReport ideal_equal(const OrbitIdeal& lhs, const OrbitIdeal& rhs,
                          MonomialOrder order = MonomialOrder::GrevLex, const GroebnerOptions& options = {});

/// The coefficient matrix (c_{tau.f})_{tau in G} for a single-type f.
VerdictReport rank_condition(const Polynomial& f, const PermGroup& group);

/// c_j = C(n-1,d) / C(n-1,d-j) for j = 0..d, cross-checked against the
/// triangular cancellation system.
std::vector<Scalar> elimination_coefficients(unsigned n, unsigned d, FieldSpec field);

/// Expands the right-hand side of the elimination identity in n + d
/// variables and compares with C(n,d) x1...xd.
VerdictReport verify_elimination_identity(unsigned n, unsigned d, FieldSpec field);

struct TelescopingCertificate {
  /// (x1 - x_{n+1}) ... (xd - x_{n+d}).
  Polynomial product;
  /// chain[0] = e_n^d(x1..xn); chain[i] = chain[i-1] - (i, n+i).chain[i-1].
  std::vector<Polynomial> chain;
  std::vector<Permutation> transpositions;
};

TelescopingCertificate telescoping_certificate(unsigned n, unsigned d, std::size_t N,
                                               FieldSpec field = FieldSpec::rationals());
/// Recomputes every step and the factored form of each chain element.
bool verify_telescoping(const TelescopingCertificate& cert, unsigned n, unsigned d);

/// Sum of sigma.f over all group elements.
Polynomial symmetrize(const Polynomial& f, const PermGroup& group);

VerdictReport verify_squarefree_theorem(const Polynomial& f, std::size_t N,
                                        const GroebnerOptions& options = {});

/// sqrt(G.f) = (G.x1...xk), checked by a support inspection for one
/// inclusion and a radical membership test for the other.
VerdictReport radical_orbit_equality(const OrbitIdeal& ideal, unsigned k, const GroebnerOptions& options = {});

struct WitnessSearch {
  WitnessPoint witness;
  /// 'a' all-ones point, 'b' scaled roots of unity, 'c' sign/zero pool.
  char stage = 'a';
  /// The exponent e with zeta_i^e = 1 in stage b.
  unsigned e = 0;
  /// All coordinates nonzero.
  bool torus = false;
};

/// Searches a finite pool of points for a nonzero common zero of the
/// generators. An empty result does not prove that none exists.
std::optional<WitnessSearch> monomial_free_witness(const OrbitIdeal& ideal);
/// Same search, keeping only common zeros at which f does not vanish.
std::optional<WitnessSearch> witness_against(const OrbitIdeal& ideal, const Polynomial& f);

/// Certificate for m^k in the ideal with the least k <= max_power, or nullopt.
std::optional<std::pair<unsigned, Certificate>> radical_power_certificate(
    const Polynomial& m, const OrbitIdeal& ideal, unsigned max_power = 8, const GroebnerOptions& options = {});

enum class GenericProperty { IrrelevantRadical, MonomialIdeal, RadicalOrbit };

struct GenericitySpec {
  SupportSet support;
  PermGroup group;
  GenericProperty property = GenericProperty::IrrelevantRadical;
  /// Required for RadicalOrbit.
  unsigned k = 0;
  FieldSpec field = FieldSpec::rationals();
  std::size_t trials = 20;
  long coeff_box = 9;
  std::uint64_t seed = 0;
  /// Deterministic coefficient vectors evaluated after the random trials.
  std::vector<std::pair<std::string, std::vector<long>>> probes{};
  GroebnerOptions options{};
};

std::string to_string(GenericProperty property, unsigned k = 0);

/// Validates the hypotheses for the property, then samples coefficient
/// vectors uniformly from ([-B, B] \ {0})^A. Deterministic in the seed.
GenericityReport sample_genericity(const GenericitySpec& spec);

/// The registered verifier used by sample_genericity.
bool generic_property_holds(const Polynomial& f, const PermGroup& group, GenericProperty property, unsigned k,
                            const GroebnerOptions& options = {});

}  // namespace symorb
