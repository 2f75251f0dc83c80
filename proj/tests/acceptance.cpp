// Acceptance suite: one PASS/FAIL line per criterion. With --slow the
// characteristic-2 criterion also runs N = 6 and N = 7.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "symorb/combinatorics.hpp"
#include "symorb/scenarios.hpp"
#include "symorb/sym_ideals.hpp"

using namespace symorb;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;
  std::string info;

  void expect(bool condition, const std::string& what) {
    if (!condition && ok) detail = what;
    ok = ok && condition;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Polynomial P(const std::string& text, std::size_t nvars, FieldSpec field = Q) {
  return parse_polynomial(text, nvars, field);
}

OrbitIdeal S(std::size_t N, const Polynomial& f) { return OrbitIdeal({f}, PermGroup::symmetric(N)); }

// 1. lex basis of (S4.e_3^2)
Check groebner_reproduction() {
  Check c;
  const auto start = Clock::now();
  const auto ideal = S(4, elementary_symmetric(4, 3, 2, Q));
  const auto gb = buchberger(ideal.generators(), MonomialOrder::Lex);
  const double elapsed = seconds_since(start);
  const std::vector<std::string> listed{"x1*x2 - x3*x4", "x1*x3 - x2*x4", "x1*x4 + x2*x4 + x3*x4",
                                        "x2*x3 + x2*x4 + x3*x4", "x2^2*x4", "x2*x4^2", "x3^2*x4", "x3*x4^2"};
  std::vector<Polynomial> expected, got;
  for (const auto& s : listed) expected.push_back(primitive_part(P(s, 4), MonomialOrder::Lex));
  for (const auto& b : gb.basis()) got.push_back(primitive_part(b, MonomialOrder::Lex));
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  c.expect(got.size() == 8, "basis has " + std::to_string(got.size()) + " elements");
  c.expect(got == expected, "basis differs from the listed elements");
  c.expect(satisfies_buchberger_criterion(gb.basis(), MonomialOrder::Lex), "s-pairs do not reduce to zero");
  c.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  return c;
}

long occurrences(unsigned n, unsigned d, unsigned j, unsigned a) {
  const unsigned N = n + d;
  const unsigned monomial = ((1u << a) - 1) | (((1u << (d - a)) - 1) << d);
  long count = 0;
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != n) continue;
    if (static_cast<unsigned>(__builtin_popcount(mask & ((1u << d) - 1))) != d - j) continue;
    if ((mask & monomial) == monomial) ++count;
  }
  return count;
}

// 2. elimination identity on the grid, coefficients against the cancellation system
Check elimination_identity() {
  Check c;
  const auto start = Clock::now();
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned d = 1; d < n; ++d) {
      const std::string tag = "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
      c.expect(verify_elimination_identity(n, d, Q).verdict, "identity fails at " + tag);
      const auto coefficients = elimination_coefficients(n, d, Q);
      std::vector<mpq_class> solved(d + 1);
      solved[0] = 1;
      for (unsigned j = 1; j <= d; ++j) {
        mpq_class rest = 0;
        for (unsigned i = 0; i < j; ++i) rest += (i % 2 ? -1 : 1) * solved[i] * occurrences(n, d, i, d - j);
        solved[j] = -rest / ((j % 2 ? -1 : 1) * mpq_class(occurrences(n, d, j, d - j)));
      }
      for (unsigned j = 0; j <= d; ++j) {
        c.expect(coefficients[j].rational() == solved[j], "c_" + std::to_string(j) + " differs at " + tag);
      }
    }
  }
  const auto c32 = elimination_coefficients(3, 2, Q);
  c.expect(c32 == std::vector<Scalar>{Scalar(Q, 1L), Scalar(Q, 1, 2), Scalar(Q, 1L)}, "c(3,2) != (1, 1/2, 1)");
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
  return c;
}

// 3. binomial identity grid
Check lemma_grid() {
  Check c;
  for (long n = 2; n <= 12; ++n) {
    for (long d = 1; d <= n - 1; ++d) {
      for (long a = 0; a <= d; ++a) {
        const Scalar expected = a == d ? Scalar(Q, binomial(n, d)) : Scalar::zero(Q);
        c.expect(lemma_identity_value(n, d, a) == expected,
                 "n=" + std::to_string(n) + " d=" + std::to_string(d) + " a=" + std::to_string(a));
      }
    }
  }
  return c;
}

// 4. characteristic 2
Check characteristic_two(bool slow) {
  Check c;
  std::vector<std::size_t> sizes{5};
  if (slow) sizes.insert(sizes.end(), {6, 7});
  for (std::size_t N : sizes) {
    const auto ideal = S(N, elementary_symmetric(N, 3, 2, F2));
    const Polynomial m = P("x1*x2", N, F2);
    const std::string tag = " for N=" + std::to_string(N);
    c.expect(!ideal_member(m, ideal.generators()), "x1*x2 in the ideal" + tag);
    c.expect(ideal_member(m.pow(2), ideal.generators()), "(x1*x2)^2 not in the ideal" + tag);
    c.expect(!graded_member(m, ideal).verdict, "graded: x1*x2 in the ideal" + tag);
    const auto square = graded_member(m.pow(2), ideal);
    c.expect(square.verdict && reverify(square), "graded: no certificate for (x1*x2)^2" + tag);
  }
  const auto ideal = S(5, elementary_symmetric(5, 3, 2, F2));
  const auto radical = radical_orbit_equality(ideal, 2);
  c.expect(radical.verdict && reverify(radical), "radical orbit equality fails over F2");
  const auto equal = ideal_equal(ideal, S(5, P("x1*x2", 5, F2)));
  c.expect(!equal.verdict && reverify(equal), "ideal equality holds over F2");
  return c;
}

// 5. characteristic dividing C(3,2)
Check characteristic_divides() {
  Check c;
  const auto ideal = S(5, elementary_symmetric(5, 3, 2, F3));
  const auto w = monomial_free_witness(ideal);
  c.expect(w.has_value(), "no witness found");
  if (w) {
    c.expect(w->stage == 'a', "witness is not the all-ones point");
    c.expect(std::all_of(w->witness.point.begin(), w->witness.point.end(), [](const Scalar& s) { return s.is_one(); }),
             "witness is not the all-ones point");
    c.expect(reverify(Certificate(w->witness)), "witness does not re-verify");
  }
  // a torus point keeps every monomial nonzero, so no monomial lies in the radical
  const auto radical = radical_orbit_equality(ideal, 2);
  c.expect(!radical.verdict && reverify(radical), "radical orbit equality does not fail over F3");
  for (const auto& m : monomials_of_degree(5, 2)) {
    c.expect(!radical_member(Polynomial::monomial(F3, m), ideal.generators()), m.to_string() + " in the radical");
  }
  return c;
}

// 6. x1^2 not in (S_n.(x1^2 + t x1 x2))
Check counterexample_family() {
  Check c;
  for (long t : {1L, 2L, -1L, 0L}) {
    for (std::size_t n : {2u, 3u, 4u}) {
      const Polynomial f = P("x1^2", n) + P("x1*x2", n).scale(Scalar(Q, t));
      const auto r = graded_member(P("x1^2", n), S(n, f));
      const std::string tag = "t=" + std::to_string(t) + " n=" + std::to_string(n);
      if (t == 0) {
        c.expect(r.verdict && reverify(r), "x1^2 missing at " + tag);
      } else {
        c.expect(!r.verdict, "x1^2 member at " + tag);
      }
    }
  }
  return c;
}

// 7. radical of (S3.(x1^2 x2 + x1 x2^2))
Check radical_example() {
  Check c;
  const auto ideal = S(3, P("x1^2*x2 + x1*x2^2", 3));
  c.expect(radical_member(P("x1*x2*x3", 3), ideal.generators()), "x1*x2*x3 not in the radical");
  c.expect(!radical_member(P("x1*x2", 3), ideal.generators()), "x1*x2 in the radical");
  const auto cert = radical_power_certificate(P("x1*x2*x3", 3), ideal);
  c.expect(cert.has_value() && reverify(cert->second), "no power certificate for x1*x2*x3");
  const auto w = witness_against(ideal, P("x1*x2", 3));
  c.expect(w.has_value(), "no witness against x1*x2");
  if (w) {
    const std::vector<Scalar> expected{Scalar(Q, 1L), Scalar(Q, -1L), Scalar(Q, 0L)};
    c.expect(w->witness.point == expected, "witness is not (1,-1,0)");
    c.expect(reverify(Certificate(w->witness)), "witness does not re-verify");
  }
  return c;
}

// 8. 2 x1 from three translates
Check inhomogeneous_monomial() {
  Check c;
  const std::string f = "x1 + x2 + x1^2 - x2^2";
  for (const FieldSpec field : {Q, F2}) {
    const auto ideal = S(3, P(f, 3, field));
    const Polynomial g1 = P(f, 3, field);
    const Polynomial g2 = P("x3 + x1 + x3^2 - x1^2", 3, field);
    const Polynomial g3 = P("x3 + x2 + x3^2 - x2^2", 3, field);
    for (const auto& g : {g1, g2, g3}) {
      c.expect(std::find(ideal.generators().begin(), ideal.generators().end(), g) != ideal.generators().end(),
               "translate is not an orbit element");
    }
    const Monomial one(3);
    const std::vector<LinearCombination::Entry> entries{
        {Scalar::one(field), one, g1}, {Scalar::one(field), one, g2}, {Scalar(field, -1L), one, g3}};
    const bool two_x1 = reverify(Certificate(LinearCombination{P("2*x1", 3, field), entries}));
    const bool x1 = reverify(Certificate(LinearCombination{P("x1", 3, field), entries}));
    const bool member = ideal_member(P("x1", 3, field), ideal.generators());
    if (field.is_rational()) {
      c.expect(two_x1, "2*x1 identity fails over Q");
      c.expect(member, "x1 not in the ideal over Q");
    } else {
      c.expect(!x1, "the combination gives x1 over F2");
      c.expect(!member, "x1 in the ideal over F2");
    }
  }
  return c;
}

// 9. square-free theorem on seeded instances
Check squarefree_theorem() {
  Check c;
  const auto start = Clock::now();
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<long> draw(-5, 4);
  auto nonzero = [&] {
    long v = draw(rng);
    return v >= 0 ? v + 1 : v;
  };
  const std::vector<Monomial> support{Monomial{1, 1, 0}, Monomial{1, 0, 1}, Monomial{0, 1, 1}};
  auto build = [&](const std::vector<long>& coefficients) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t i = 0; i < support.size(); ++i) terms.push_back({support[i], Scalar(Q, coefficients[i])});
    return Polynomial::from_terms(Q, 3, std::move(terms)).embed(5);
  };
  const auto target = S(5, P("x1*x2", 5));
  int equal_cases = 0;
  while (equal_cases < 20) {
    std::vector<long> cs{nonzero(), nonzero(), nonzero()};
    if (cs[0] + cs[1] + cs[2] == 0) continue;
    const Polynomial f = build(cs);
    const auto r = ideal_equal(S(5, f), target);
    c.expect(r.verdict && reverify(r), "ideal equality fails for " + format_polynomial(f));
    ++equal_cases;
  }
  int witness_cases = 0;
  while (witness_cases < 5) {
    std::vector<long> cs{nonzero(), nonzero(), 0};
    cs[2] = -cs[0] - cs[1];
    if (cs[2] == 0 || cs[2] < -5 || cs[2] > 5) continue;
    const Polynomial f = build(cs);
    const auto r = verify_squarefree_theorem(f, 5);
    c.expect(r.verdict && r.parameter("branch") == "witness" && reverify(r),
             "witness branch not taken for " + format_polynomial(f));
    ++witness_cases;
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 120.0, "took " + std::to_string(elapsed) + " s");
  return c;
}

// 10. telescoping chains
Check telescoping() {
  Check c;
  for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 2}, {4, 2}, {4, 3}}) {
    const std::size_t N = n + d;
    const std::string tag = " at (" + std::to_string(n) + "," + std::to_string(d) + ")";
    const auto cert = telescoping_certificate(n, d, N);
    c.expect(verify_telescoping(cert, n, d), "chain does not re-verify" + tag);
    const auto ideal = S(N, elementary_symmetric(N, n, d, Q));
    const auto gb = buchberger(ideal.generators(), MonomialOrder::GrevLex);
    c.expect(normal_form(cert.product, gb).is_zero(), "normal form is nonzero" + tag);
  }
  return c;
}

// 11. genericity sampling
Check genericity() {
  Check c;
  GenericitySpec radical{.support = SupportSet::of(P("x1^3 + x1*x2*x3", 3)),
                         .group = PermGroup::symmetric(3),
                         .property = GenericProperty::IrrelevantRadical,
                         .seed = kDefaultSeed};
  const auto r1 = sample_genericity(radical);
  c.expect(r1.trials == 20 && r1.successes >= 18,
           "irrelevant_radical succeeded in " + std::to_string(r1.successes) + " of 20");

  const Polynomial all_types = P("x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2", 3);
  GenericitySpec monomial{.support = SupportSet::of(all_types),
                          .group = PermGroup::symmetric(3),
                          .property = GenericProperty::MonomialIdeal,
                          .seed = kDefaultSeed};
  monomial.probes.push_back({"all-ones", std::vector<long>(6, 1)});
  const auto r2 = sample_genericity(monomial);
  c.expect(r2.trials == 20 && r2.successes >= 18,
           "rank condition succeeded in " + std::to_string(r2.successes) + " of 20");
  c.expect(r2.probes.size() == 1 && !r2.probes[0].success, "the all-ones vector is not a failure");
  c.expect(!rank_condition(all_types, PermGroup::symmetric(3)).verdict, "all-ones rank condition holds");
  c.info = "irrelevant_radical " + std::to_string(r1.successes) + "/20, rank condition " +
           std::to_string(r2.successes) + "/20";
  return c;
}

// 12. graded membership against Groebner membership
Check oracle_equivalence() {
  Check c;
  std::mt19937_64 rng(kDefaultSeed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto random_form = [&](FieldSpec field, std::size_t nvars, unsigned degree, long terms) {
    std::vector<Polynomial::Term> out;
    for (long k = 0; k < terms; ++k) {
      Monomial m(nvars);
      for (unsigned e = 0; e < degree; ++e) {
        const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(nvars) - 1));
        m.set(i, m[i] + 1);
      }
      long v = uniform(-3, 2);
      out.push_back({m, Scalar(field, v >= 0 ? v + 1 : v)});
    }
    return Polynomial::from_terms(field, nvars, std::move(out));
  };
  int disagreements = 0, members = 0, instances = 0;
  while (instances < 200) {
    const FieldSpec field = instances % 2 ? F5 : Q;
    const auto nvars = static_cast<std::size_t>(uniform(2, 5));
    const unsigned seed_degree = static_cast<unsigned>(uniform(1, 3));
    const Polynomial seed = random_form(field, nvars, seed_degree, uniform(1, 3));
    if (seed.is_zero()) continue;
    const long pick = uniform(0, 2);
    PermGroup group = pick == 0   ? PermGroup::symmetric(nvars)
                      : pick == 1 ? PermGroup::cyclic(nvars)
                                  : PermGroup::generated(nvars, {Permutation::transposition(nvars, 1, 2)});
    const OrbitIdeal ideal({seed}, std::move(group));
    const unsigned degree = static_cast<unsigned>(uniform(seed_degree, 4));
    Polynomial target(field, nvars);
    if (uniform(0, 1) == 0) {
      for (const auto& g : ideal.generators()) {
        if (uniform(0, 1)) target += random_form(field, nvars, degree - seed_degree, 2) * g;
      }
      if (uniform(0, 2) == 0) target += random_form(field, nvars, degree, 1);
    } else {
      target = random_form(field, nvars, degree, uniform(1, 4));
    }
    if (target.is_zero()) continue;
    ++instances;
    const auto graded = graded_member(target, ideal);
    const bool groebner = ideal_member(target, ideal.generators());
    if (graded.verdict != groebner) {
      ++disagreements;
      if (c.ok) c.detail = "disagreement on " + format_polynomial(target) + " in " + ideal.descriptor();
    }
    if (graded.verdict && !reverify(graded)) c.expect(false, "certificate fails for " + format_polynomial(target));
    members += groebner;
  }
  c.expect(disagreements == 0, c.detail.empty() ? std::to_string(disagreements) + " disagreements" : c.detail);
  c.expect(members > 20 && members < 180, "unbalanced instances: " + std::to_string(members) + " members");
  c.info = std::to_string(instances) + " instances, " + std::to_string(members) + " members";
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const bool slow = argc > 1 && std::strcmp(argv[1], "--slow") == 0;
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
      {"Groebner basis of (S4.e_3^2)", groebner_reproduction},
      {"elimination identity grid", elimination_identity},
      {"binomial identity grid", lemma_grid},
      {slow ? "characteristic 2, N = 5, 6, 7" : "characteristic 2, N = 5", [slow] { return characteristic_two(slow); }},
      {"characteristic 3 all-ones witness", characteristic_divides},
      {"x1^2 counterexample family", counterexample_family},
      {"radical of (S3.(x1^2*x2 + x1*x2^2))", radical_example},
      {"inhomogeneous monomial ideal", inhomogeneous_monomial},
      {"square-free theorem", squarefree_theorem},
      {"telescoping certificates", telescoping},
      {"genericity sampling", genericity},
      {"graded vs Groebner membership", oracle_equivalence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const std::string& tail = result.ok ? result.info : result.detail;
    std::printf("%s %2zu  %-40s %8.3fs%s%s\n", result.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                seconds_since(start), tail.empty() ? "" : "  ", tail.c_str());
    failures += !result.ok;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
