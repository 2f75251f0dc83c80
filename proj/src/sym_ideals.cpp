#include "symorb/sym_ideals.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "symorb/combinatorics.hpp"
#include "symorb/errors.hpp"

namespace symorb {

namespace {

void sort_unique(std::vector<Polynomial>& polys) {
  std::sort(polys.begin(), polys.end());
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

Polynomial product_of_variables(FieldSpec field, std::size_t nvars, std::size_t from, std::size_t to) {
  Monomial m(nvars);
  for (std::size_t i = from; i <= to; ++i) m.set(i - 1, 1);
  return Polynomial::monomial(field, m);
}

std::vector<Scalar> coefficient_vector(const Polynomial& f, const std::vector<Monomial>& rows,
                                       const std::unordered_map<Monomial, std::size_t>& index) {
  std::vector<Scalar> v(rows.size(), Scalar::zero(f.field()));
  for (const auto& t : f.terms()) v.at(index.at(t.monomial)) = t.coefficient;
  return v;
}

std::unordered_map<Monomial, std::size_t> index_of(const std::vector<Monomial>& rows) {
  std::unordered_map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
  return index;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

NormalFormTrace trace_of(const Polynomial& element, const GroebnerBasis& basis, std::string label) {
  auto division = divide(element, basis);
  return NormalFormTrace{std::move(label), basis.order(), element, basis.basis(),
                         std::move(division.quotients), std::move(division.remainder)};
}

unsigned max_generator_degree(const std::vector<Polynomial>& gens) {
  unsigned d = 0;
  for (const auto& g : gens) {
    if (!g.is_zero()) d = std::max(d, *g.total_degree());
  }
  return d;
}

bool all_homogeneous(const std::vector<Polynomial>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

}  // namespace

// ---------------------------------------------------------------------------
// OrbitIdeal

OrbitIdeal::OrbitIdeal(std::vector<Polynomial> seeds, PermGroup group)
    : seeds_(std::move(seeds)), group_(std::move(group)) {
  if (seeds_.empty()) throw DomainError("an orbit ideal needs at least one seed");
  for (const auto& s : seeds_) {
    if (s.nvars() != group_.degree()) {
      throw DomainError("seed has " + std::to_string(s.nvars()) + " variables but the group has degree " +
                        std::to_string(group_.degree()));
    }
    if (!(s.field() == seeds_.front().field())) throw FieldMismatch("seeds over different fields");
  }
  for (const auto& s : seeds_) {
    if (s.is_zero()) continue;
    auto o = group_.kind() == PermGroup::Kind::Symmetric ? symmetric_orbit(s) : orbit(s, group_);
    generators_.insert(generators_.end(), std::make_move_iterator(o.begin()), std::make_move_iterator(o.end()));
  }
  sort_unique(generators_);
}

bool OrbitIdeal::homogeneous() const { return all_homogeneous(generators_); }

std::string OrbitIdeal::descriptor() const {
  std::vector<std::string> parts;
  for (const auto& s : seeds_) parts.push_back(group_.descriptor() + "." + format_polynomial(s));
  return "(" + join(parts, ", ") + ")";
}

// ---------------------------------------------------------------------------
// graded membership

GradedPiece graded_piece(const OrbitIdeal& ideal, unsigned degree) {
  if (!ideal.homogeneous()) throw DomainError("graded pieces need homogeneous generators");
  const auto& gens = ideal.generators();
  const FieldSpec field = ideal.field();
  auto rows = monomials_of_degree(ideal.nvars(), degree);
  const auto index = index_of(rows);

  std::vector<GradedPiece::Column> columns;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const unsigned dg = *gens[g].total_degree();
    if (dg > degree) continue;
    for (const auto& u : monomials_of_degree(ideal.nvars(), degree - dg)) columns.push_back({g, u});
  }
  ExactMatrix matrix(field, rows.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& t : gens[columns[c].generator].terms()) {
      matrix.set(index.at(t.monomial * columns[c].multiplier), c, t.coefficient);
    }
  }
  return GradedPiece{degree, std::move(rows), std::move(matrix), std::move(columns)};
}

VerdictReport graded_member(const Polynomial& m, const OrbitIdeal& ideal) {
  if (!(m.field() == ideal.field()) || m.nvars() != ideal.nvars()) {
    throw FieldMismatch("target and ideal live in different rings");
  }
  if (!m.is_homogeneous()) throw DomainError("graded_member needs a homogeneous target");

  VerdictReport report;
  report.claim_id = "graded_member";
  report.param("field", ideal.field().to_string())
      .param("nvars", std::to_string(ideal.nvars()))
      .param("ideal", ideal.descriptor())
      .param("target", format_polynomial(m));

  if (m.is_zero()) {
    report.verdict = true;
    report.certificates.push_back(LinearCombination{m, {}});
    return report;
  }
  const unsigned degree = *m.total_degree();
  report.param("degree", std::to_string(degree));
  const auto& gens = ideal.generators();

  std::vector<Monomial> rows;
  std::vector<GradedPiece::Column> columns;
  std::optional<ExactMatrix> matrix;
  if (ideal.homogeneous()) {
    auto piece = graded_piece(ideal, degree);
    rows = std::move(piece.monomial_index);
    columns = std::move(piece.columns);
    matrix = std::move(piece.basis_matrix);
  } else {
    // multipliers of degree <= degree - mindeg(g); rows are every monomial that occurs
    std::vector<Monomial> seen;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const unsigned low = *gens[g].min_degree();
      if (low > degree) continue;
      for (unsigned e = 0; e <= degree - low; ++e) {
        for (const auto& u : monomials_of_degree(ideal.nvars(), e)) {
          columns.push_back({g, u});
          for (const auto& t : gens[g].terms()) seen.push_back(t.monomial * u);
        }
      }
    }
    for (const auto& t : m.terms()) seen.push_back(t.monomial);
    std::sort(seen.begin(), seen.end(), std::greater<>());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    rows = std::move(seen);
    const auto index = index_of(rows);
    matrix.emplace(ideal.field(), rows.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      for (const auto& t : gens[columns[c].generator].terms()) {
        matrix->set(index.at(t.monomial * columns[c].multiplier), c, t.coefficient);
      }
    }
    report.note("inhomogeneous generators: multipliers of degree at most deg(target) - mindeg(generator); "
                "a negative answer only rules out combinations of this shape");
  }
  report.param("rows", std::to_string(rows.size())).param("columns", std::to_string(columns.size()));

  const auto index = index_of(rows);
  bool representable = true;
  for (const auto& t : m.terms()) representable = representable && index.contains(t.monomial);
  if (!representable) {
    report.verdict = false;
    return report;
  }
  const auto target = coefficient_vector(m, rows, index);
  const auto span = in_span(target, *matrix);
  report.verdict = span.member;
  if (span.member) {
    LinearCombination combo{m, {}};
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const Scalar& x = (*span.certificate)[c];
      if (x.is_zero()) continue;
      combo.entries.push_back({x, columns[c].multiplier, gens[columns[c].generator]});
    }
    Certificate cert = std::move(combo);
    if (!reverify(cert)) throw std::logic_error("graded_member certificate failed to re-verify");
    report.certificates.push_back(std::move(cert));
  }
  return report;
}

// ---------------------------------------------------------------------------
// ideal equality

VerdictReport ideal_equal(const OrbitIdeal& lhs, const OrbitIdeal& rhs, MonomialOrder order,
                          const GroebnerOptions& options) {
  if (!(lhs.field() == rhs.field()) || lhs.nvars() != rhs.nvars()) {
    throw FieldMismatch("ideals live in different rings");
  }
  VerdictReport report;
  report.claim_id = "ideal_equal";
  report.param("field", lhs.field().to_string())
      .param("nvars", std::to_string(lhs.nvars()))
      .param("lhs", lhs.descriptor())
      .param("rhs", rhs.descriptor())
      .param("order", to_string(order));

  const bool homogeneous = lhs.homogeneous() && rhs.homogeneous();
  std::vector<Certificate> traces;
  std::optional<NormalFormTrace> failure;
  std::string failure_side;

  auto contained = [&](const OrbitIdeal& small, const OrbitIdeal& big, const std::string& side) {
    GroebnerOptions opts = options;
    opts.degree_bound.reset();
    if (homogeneous) opts.degree_bound = max_generator_degree(small.generators());
    const auto basis = buchberger(big.generators(), order, opts);
    report.param(side + "_basis_size", std::to_string(basis.basis().size()));
    for (const auto& g : small.generators()) {
      auto t = trace_of(g, basis, side + ": " + format_polynomial(g));
      if (!t.remainder.is_zero()) {
        failure = std::move(t);
        failure_side = side;
        return false;
      }
      traces.emplace_back(std::move(t));
    }
    return true;
  };

  report.verdict = contained(lhs, rhs, "lhs_in_rhs") && contained(rhs, lhs, "rhs_in_lhs");
  if (homogeneous) report.note("homogeneous input: bases truncated at the largest generator degree checked");
  if (report.verdict) {
    report.certificates = std::move(traces);
  } else {
    report.note("generator with nonzero normal form (" + failure_side + ")");
    report.certificates.emplace_back(std::move(*failure));
  }
  return report;
}

// ---------------------------------------------------------------------------
// rank condition

VerdictReport rank_condition(const Polynomial& f, const PermGroup& group) {
  if (f.is_zero()) throw DomainError("rank_condition needs a nonzero polynomial");
  if (f.nvars() != group.degree()) throw DomainError("polynomial and group have different degrees");
  const auto analysis = analyze_support(SupportSet::of(f));
  if (analysis.types.size() != 1) throw DomainError("support mixes monomial types");
  const Partition type = *analysis.types.begin();
  if (!transitive_on_type(group, type)) {
    throw DomainError("group is not transitive on monomials of type " + to_string(type));
  }

  const auto rows = monomials_of_type(type, f.nvars());
  const auto index = index_of(rows);
  const auto& elements = group.elements();
  ExactMatrix matrix(f.field(), rows.size(), elements.size());
  std::vector<Polynomial> images;
  images.reserve(elements.size());
  for (std::size_t c = 0; c < elements.size(); ++c) {
    images.push_back(act(elements[c], f));
    for (const auto& t : images.back().terms()) matrix.set(index.at(t.monomial), c, t.coefficient);
  }
  const std::size_t r = rank(matrix);

  VerdictReport report;
  report.claim_id = "rank_condition";
  report.param("field", f.field().to_string())
      .param("f", format_polynomial(f))
      .param("group", group.descriptor())
      .param("type", to_string(type))
      .param("rows", std::to_string(rows.size()))
      .param("columns", std::to_string(elements.size()))
      .param("rank", std::to_string(r));
  report.verdict = r == rows.size();
  if (report.verdict) {
    // one term of f as a combination of the tau.f
    const Monomial term = f.terms().front().monomial;
    std::vector<Scalar> target(rows.size(), Scalar::zero(f.field()));
    target[index.at(term)] = Scalar::one(f.field());
    const auto span = in_span(target, matrix);
    LinearCombination combo{Polynomial::monomial(f.field(), term), {}};
    for (std::size_t c = 0; c < elements.size(); ++c) {
      const Scalar& x = (*span.certificate)[c];
      if (!x.is_zero()) combo.entries.push_back({x, Monomial(f.nvars()), images[c]});
    }
    report.certificates.emplace_back(std::move(combo));
    report.note("(G.f) is the monomial ideal generated by the orbit of " + term.to_string());
  }
  return report;
}

// ---------------------------------------------------------------------------
// elimination identity

std::vector<Scalar> elimination_coefficients(unsigned n, unsigned d, FieldSpec field) {
  if (d < 1 || d + 1 > n) throw DomainError("elimination coefficients need 1 <= d <= n - 1");
  const mpz_class top = binomial(n - 1, d);
  std::vector<Scalar> closed;
  for (unsigned j = 0; j <= d; ++j) {
    const Scalar den(field, binomial(n - 1, d - j));
    if (den.is_zero()) {
      throw DomainError("C(" + std::to_string(n - 1) + "," + std::to_string(d - j) + ") vanishes in " +
                        field.to_string() + " at j=" + std::to_string(j));
    }
    closed.push_back(Scalar(field, top) / den);
  }

  // triangular cancellation system over Q:
  // sum_{j<=j'} (-1)^j c_j C(j',j) C(n-j',d-j) = 0 for j' >= 1, c_0 = 1
  std::vector<mpq_class> solved{mpq_class(1)};
  for (unsigned jp = 1; jp <= d; ++jp) {
    mpq_class acc = 0;
    for (unsigned j = 0; j < jp; ++j) {
      mpq_class term = solved[j] * mpq_class(binomial(jp, j) * binomial(n - jp, d - j));
      acc += (j % 2 == 0) ? term : mpq_class(-term);
    }
    mpq_class pivot(binomial(n - jp, d - jp));
    if (jp % 2 == 1) pivot = -pivot;
    mpq_class c = -acc / pivot;
    c.canonicalize();
    solved.push_back(c);
  }
  for (unsigned j = 0; j <= d; ++j) {
    const Scalar s(field, solved[j].get_num(), solved[j].get_den());
    if (!(s == closed[j])) {
      throw std::logic_error("closed-form elimination coefficient disagrees with the cancellation system at j=" +
                             std::to_string(j));
    }
  }
  return closed;
}

VerdictReport verify_elimination_identity(unsigned n, unsigned d, FieldSpec field) {
  const auto c = elimination_coefficients(n, d, field);
  const std::size_t N = n + d;

  // S_j = sum over n-subsets J of {1..N} with |J cap {1..d}| = d - j of e^d(x_J)
  std::vector<std::vector<Polynomial::Term>> parts(d + 1);
  std::vector<bool> mask(N, false);
  std::fill(mask.begin(), mask.begin() + n, true);
  std::vector<std::size_t> subset;
  do {
    subset.clear();
    std::size_t inside = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if (!mask[i]) continue;
      subset.push_back(i + 1);
      if (i < d) ++inside;
    }
    const std::size_t j = d - inside;
    const auto e = elementary_symmetric(N, subset, d, field);
    parts[j].insert(parts[j].end(), e.terms().begin(), e.terms().end());
  } while (std::prev_permutation(mask.begin(), mask.end()));

  Polynomial rhs(field, N);
  for (unsigned j = 0; j <= d; ++j) {
    const auto sj = Polynomial::from_terms(field, N, std::move(parts[j]));
    const Scalar coeff = (j % 2 == 0) ? c[j] : -c[j];
    rhs += sj.scale(coeff);
  }
  const Polynomial lhs = product_of_variables(field, N, 1, d).scale(Scalar(field, binomial(n, d)));
  const Polynomial difference = rhs - lhs;

  VerdictReport report;
  report.claim_id = "elimination_identity";
  std::vector<std::string> cs;
  for (const auto& s : c) cs.push_back(s.to_string());
  report.param("n", std::to_string(n))
      .param("d", std::to_string(d))
      .param("N", std::to_string(N))
      .param("field", field.to_string())
      .param("coefficients", join(cs, ","))
      .param("difference", format_polynomial(difference));
  report.verdict = difference.is_zero();
  report.certificates.emplace_back(TextCertificate{"expanded rhs - C(n,d)*x1*...*xd = " +
                                                   format_polynomial(difference)});
  if (char_divides_binomial(field, n, d)) {
    report.note("C(n,d) vanishes in " + field.to_string() + ", so the identity does not isolate x1*...*xd");
  }
  return report;
}

// ---------------------------------------------------------------------------
// telescoping

TelescopingCertificate telescoping_certificate(unsigned n, unsigned d, std::size_t N, FieldSpec field) {
  if (d < 1 || d > n) throw DomainError("telescoping needs 1 <= d <= n");
  if (N < n + d) throw DomainError("telescoping needs N >= n + d");
  TelescopingCertificate cert{Polynomial::constant(field, N, Scalar::one(field)), {}, {}};
  cert.chain.push_back(elementary_symmetric(N, n, d, field));
  for (unsigned i = 1; i <= d; ++i) {
    cert.transpositions.push_back(Permutation::transposition(N, i, n + i));
    const auto& prev = cert.chain.back();
    cert.chain.push_back(prev - act(cert.transpositions.back(), prev));
    cert.product = cert.product * (Polynomial::variable(field, N, i) - Polynomial::variable(field, N, n + i));
  }
  if (!verify_telescoping(cert, n, d)) throw std::logic_error("telescoping chain failed to re-verify");
  return cert;
}

bool verify_telescoping(const TelescopingCertificate& cert, unsigned n, unsigned d) {
  if (cert.chain.size() != d + 1 || cert.transpositions.size() != d) return false;
  const FieldSpec field = cert.product.field();
  const std::size_t N = cert.product.nvars();
  if (!(cert.chain[0] == elementary_symmetric(N, n, d, field))) return false;
  Polynomial factor = Polynomial::constant(field, N, Scalar::one(field));
  for (unsigned i = 1; i <= d; ++i) {
    const auto& tau = cert.transpositions[i - 1];
    if (!(tau == Permutation::transposition(N, i, n + i))) return false;
    if (!(cert.chain[i] == cert.chain[i - 1] - act(tau, cert.chain[i - 1]))) return false;
    factor = factor * (Polynomial::variable(field, N, i) - Polynomial::variable(field, N, n + i));
    std::vector<std::size_t> rest;
    for (std::size_t v = i + 1; v <= n; ++v) rest.push_back(v);
    if (!(cert.chain[i] == factor * elementary_symmetric(N, rest, d - i, field))) return false;
  }
  return cert.chain[d] == cert.product && factor == cert.product;
}

// ---------------------------------------------------------------------------
// symmetrization and the square-free theorem

Polynomial symmetrize(const Polynomial& f, const PermGroup& group) {
  if (f.nvars() != group.degree()) throw DomainError("polynomial and group have different degrees");
  std::vector<Polynomial::Term> terms;
  for (const auto& sigma : group.elements()) {
    const auto image = act(sigma, f);
    terms.insert(terms.end(), image.terms().begin(), image.terms().end());
  }
  return Polynomial::from_terms(f.field(), f.nvars(), std::move(terms));
}

VerdictReport verify_squarefree_theorem(const Polynomial& f, std::size_t N, const GroebnerOptions& options) {
  if (f.is_zero()) throw DomainError("the zero polynomial is excluded");
  if (!f.is_homogeneous()) throw DomainError("f must be homogeneous");
  for (const auto& t : f.terms()) {
    if (!t.monomial.is_squarefree()) throw DomainError("term " + t.monomial.to_string() + " is not square-free");
  }
  const FieldSpec field = f.field();
  const std::size_t n = f.used_variables();
  const unsigned d = *f.total_degree();
  if (field.characteristic() != 0 && field.characteristic() <= n) {
    throw DomainError("characteristic " + std::to_string(field.characteristic()) + " must exceed n = " +
                      std::to_string(n));
  }
  if (N < n) throw DomainError("N must be at least n");

  const Polynomial fN = f.embed(N);
  std::vector<Scalar> ones(N, Scalar::one(field));
  const Scalar c = evaluate(fN, ones);

  VerdictReport report;
  report.claim_id = "squarefree_theorem";
  report.param("field", field.to_string())
      .param("f", format_polynomial(f))
      .param("n", std::to_string(n))
      .param("d", std::to_string(d))
      .param("N", std::to_string(N))
      .param("c", c.to_string());

  const PermGroup SN = PermGroup::symmetric(N);
  const OrbitIdeal I({fN}, SN);

  if (c.is_zero()) {
    report.param("branch", "witness");
    WitnessPoint w{ones, I.generators(), {product_of_variables(field, N, 1, N)},
                   "all-ones point: a torus zero, so the radical contains no monomial"};
    report.verdict = reverify(Certificate(w));
    report.certificates.emplace_back(std::move(w));
    return report;
  }

  report.param("branch", "equality");
  if (f.size() == 1) {
    report.verdict = true;
    report.certificates.emplace_back(TextCertificate{"f = " + c.to_string() + " * " +
                                                     f.terms().front().monomial.to_string() +
                                                     " is a nonzero multiple of a monomial"});
    report.note("single-term f: equality holds for every N");
    return report;
  }
  if (N < n + d) throw DomainError("the equality branch needs N >= n + d");

  if (n <= 6) {
    // sum over S_n of sigma.f = c d! (n-d)! e_n^d
    const PermGroup Sn = PermGroup::symmetric(n);
    Polynomial fn(field, n);
    for (const auto& t : f.terms()) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, t.monomial[i]);
      fn += Polynomial::term(field, m, t.coefficient);
    }
    mpz_class scale = 1;
    for (unsigned i = 2; i <= d; ++i) scale *= i;
    for (std::size_t i = 2; i <= n - d; ++i) scale *= static_cast<unsigned long>(i);
    LinearCombination combo{elementary_symmetric(N, n, d, field).scale(c * Scalar(field, scale)), {}};
    for (const auto& sigma : Sn.elements()) {
      combo.entries.push_back({Scalar::one(field), Monomial(N), act(sigma, fn).embed(N)});
    }
    if (!reverify(Certificate(combo))) throw std::logic_error("symmetrization identity failed");
    report.certificates.emplace_back(std::move(combo));
  }

  const OrbitIdeal J({product_of_variables(field, N, 1, d)}, SN);
  auto eq = ideal_equal(I, J, MonomialOrder::GrevLex, options);
  report.verdict = eq.verdict;
  for (auto& cert : eq.certificates) report.certificates.push_back(std::move(cert));
  for (auto& note : eq.notes) report.notes.push_back(std::move(note));
  return report;
}

// ---------------------------------------------------------------------------
// witnesses

namespace {

std::vector<Scalar> univariate_coefficients(const Polynomial& g, const std::vector<Scalar>& zeta) {
  std::vector<Scalar> coeffs(*g.total_degree() + 1, Scalar::zero(g.field()));
  for (const auto& t : g.terms()) {
    Scalar v = t.coefficient;
    for (std::size_t i = 0; i < zeta.size(); ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) v *= zeta[i];
    }
    coeffs[t.monomial.degree()] += v;
  }
  return coeffs;
}

std::vector<mpz_class> divisors(mpz_class a) {
  a = abs(a);
  std::vector<mpz_class> out;
  if (a == 0 || a > mpz_class("1000000000000")) return out;
  for (mpz_class i = 1; i * i <= a; ++i) {
    if (a % i == 0) {
      out.push_back(i);
      if (i * i != a) out.push_back(a / i);
    }
  }
  return out;
}

/// Nonzero roots of sum coeffs[i] t^i in the field, by rational-root search
/// over Q or exhaustive search over F_p (p up to 10^5).
std::vector<Scalar> nonzero_roots(const std::vector<Scalar>& coeffs, FieldSpec field) {
  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (low < coeffs.size() && coeffs[low].is_zero()) ++low;
  if (low == coeffs.size()) {
    roots.push_back(Scalar::one(field));
    return roots;
  }
  std::size_t high = coeffs.size() - 1;
  while (coeffs[high].is_zero()) --high;
  if (high == low) return roots;

  auto eval = [&](const Scalar& t) {
    Scalar acc = Scalar::zero(field);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
    return acc;
  };
  if (field.is_prime_field()) {
    if (field.characteristic() > 100'000) return roots;
    for (std::uint64_t v = 1; v < field.characteristic(); ++v) {
      const Scalar t = Scalar::from_residue(field, v);
      if (eval(t).is_zero()) roots.push_back(t);
    }
    return roots;
  }
  mpz_class lcm_den = 1;
  for (const auto& c : coeffs) lcm_den = lcm(lcm_den, mpz_class(c.rational().get_den()));
  const mpz_class a_low = coeffs[low].rational().get_num() * (lcm_den / coeffs[low].rational().get_den());
  const mpz_class a_high = coeffs[high].rational().get_num() * (lcm_den / coeffs[high].rational().get_den());
  std::vector<mpq_class> candidates;
  for (const auto& p : divisors(a_low)) {
    for (const auto& q : divisors(a_high)) {
      mpq_class r(p, q);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::sort(candidates.begin(), candidates.end(), [](const mpq_class& a, const mpq_class& b) {
    const mpq_class aa = abs(a);
    const mpq_class bb = abs(b);
    if (aa != bb) return aa < bb;
    return a > b;
  });
  for (const auto& r : candidates) {
    const Scalar t = Scalar::from_rational(r);
    if (eval(t).is_zero()) roots.push_back(t);
  }
  return roots;
}

std::vector<Scalar> roots_of_unity(unsigned e, FieldSpec field) {
  std::vector<Scalar> out{Scalar::one(field)};
  if (field.is_rational()) {
    if (e % 2 == 0) out.push_back(Scalar(field, -1L));
    return out;
  }
  if (field.characteristic() > 100'000) return out;
  for (std::uint64_t v = 2; v < field.characteristic(); ++v) {
    Scalar z = Scalar::from_residue(field, v);
    Scalar power = Scalar::one(field);
    for (unsigned i = 0; i < e; ++i) power *= z;
    if (power.is_one()) out.push_back(z);
  }
  return out;
}

bool kills_all(const std::vector<Polynomial>& gens, const std::vector<Scalar>& point) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Polynomial& g) { return evaluate(g, point).is_zero(); });
}

bool is_origin(const std::vector<Scalar>& point) {
  return std::all_of(point.begin(), point.end(), [](const Scalar& s) { return s.is_zero(); });
}

constexpr std::size_t kMaxPatterns = 4096;

/// First candidate point accepted by `accept` among the common zeros of the
/// generators, in the order: all-ones, t*zeta, sign/zero pool.
template <class Accept>
std::optional<WitnessSearch> search_points(const OrbitIdeal& ideal, Accept accept) {
  const FieldSpec field = ideal.field();
  const std::size_t N = ideal.nvars();
  const auto& gens = ideal.generators();
  auto finish = [&](std::vector<Scalar> point, char stage, unsigned e,
                    std::string description) -> std::optional<WitnessSearch> {
    if (is_origin(point) || !kills_all(gens, point)) return std::nullopt;
    WitnessSearch result;
    result.stage = stage;
    result.e = e;
    result.torus = std::none_of(point.begin(), point.end(), [](const Scalar& s) { return s.is_zero(); });
    result.witness = WitnessPoint{std::move(point), gens, {}, std::move(description)};
    if (!accept(result.witness)) return std::nullopt;
    return result;
  };

  if (auto r = finish(std::vector<Scalar>(N, Scalar::one(field)), 'a', 0, "all-ones point")) return r;

  if (!gens.empty()) {
    const Polynomial& g0 = gens.front();
    const unsigned max_e = std::max(1u, max_generator_degree(gens));
    for (unsigned e = 1; e <= max_e; ++e) {
      const auto unity = roots_of_unity(e, field);
      std::vector<std::size_t> digits(N, 0);
      for (std::size_t pattern = 0; pattern < kMaxPatterns; ++pattern) {
        std::vector<Scalar> zeta;
        zeta.reserve(N);
        for (std::size_t i = 0; i < N; ++i) zeta.push_back(unity[digits[i]]);
        for (const auto& t : nonzero_roots(univariate_coefficients(g0, zeta), field)) {
          std::vector<Scalar> point;
          for (const auto& z : zeta) point.push_back(t * z);
          if (auto r = finish(std::move(point), 'b', e,
                              "t*zeta with t = " + t.to_string() + " and zeta_i^" + std::to_string(e) + " = 1")) {
            return r;
          }
        }
        // next pattern, zeta_1 fixed to 1
        std::size_t pos = 1;
        while (pos < N && ++digits[pos] == unity.size()) digits[pos++] = 0;
        if (pos >= N) break;
      }
    }
  }

  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      std::vector<Scalar> point(N, Scalar::zero(field));
      point[i] = Scalar::one(field);
      point[j] = Scalar(field, -1L);
      if (auto r = finish(std::move(point), 'c', 0, "permutation of (1,-1,0,...,0)")) return r;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<WitnessSearch> monomial_free_witness(const OrbitIdeal& ideal) {
  return search_points(ideal, [](const WitnessPoint&) { return true; });
}

std::optional<WitnessSearch> witness_against(const OrbitIdeal& ideal, const Polynomial& f) {
  return search_points(ideal, [&](WitnessPoint& w) {
    if (evaluate(f, w.point).is_zero()) return false;
    w.nonvanishing.push_back(f);
    return true;
  });
}

// ---------------------------------------------------------------------------
// radical membership certificates and radical equality

std::optional<std::pair<unsigned, Certificate>> radical_power_certificate(const Polynomial& m,
                                                                         const OrbitIdeal& ideal,
                                                                         unsigned max_power,
                                                                         const GroebnerOptions& options) {
  const bool homogeneous = ideal.homogeneous() && m.is_homogeneous();
  Polynomial power = m;
  for (unsigned k = 1; k <= max_power; ++k, power = power * m) {
    if (!ideal_member(power, ideal.generators(), MonomialOrder::GrevLex, options)) continue;
    if (homogeneous) {
      const unsigned degree = *power.total_degree();
      const mpz_class rows = binomial(degree + ideal.nvars() - 1, ideal.nvars() - 1);
      if (rows <= 2000) {
        auto report = graded_member(power, ideal);
        if (report.verdict) return std::make_pair(k, std::move(report.certificates.front()));
      }
    }
    GroebnerOptions opts = options;
    opts.degree_bound.reset();
    if (homogeneous) opts.degree_bound = *power.total_degree();
    const auto basis = buchberger(ideal.generators(), MonomialOrder::GrevLex, opts);
    return std::make_pair(k, Certificate(trace_of(power, basis, "power " + std::to_string(k))));
  }
  return std::nullopt;
}

namespace {

Monomial squarefree_prefix(std::size_t nvars, unsigned k) {
  Monomial m(nvars);
  for (unsigned i = 0; i < k; ++i) m.set(i, 1);
  return m;
}

std::vector<Monomial> check_orbit_inclusion(const OrbitIdeal& ideal, unsigned k) {
  if (!ideal.homogeneous()) throw DomainError("radical orbit equality needs homogeneous generators");
  if (k < 1 || k > ideal.nvars()) throw DomainError("k must lie in 1..nvars");
  const auto targets = orbit(squarefree_prefix(ideal.nvars(), k), ideal.group());
  for (const auto& g : ideal.generators()) {
    for (const auto& t : g.terms()) {
      const bool covered =
          std::any_of(targets.begin(), targets.end(), [&](const Monomial& o) { return o.divides(t.monomial); });
      if (!covered) {
        throw DomainError("term " + t.monomial.to_string() + " is not divisible by any element of the orbit of " +
                          squarefree_prefix(ideal.nvars(), k).to_string());
      }
    }
  }
  return targets;
}

}  // namespace

VerdictReport radical_orbit_equality(const OrbitIdeal& ideal, unsigned k, const GroebnerOptions& options) {
  const auto targets = check_orbit_inclusion(ideal, k);
  const Monomial rep = *std::min_element(targets.begin(), targets.end());
  const Polynomial rep_poly = Polynomial::monomial(ideal.field(), rep);

  VerdictReport report;
  report.claim_id = "radical_orbit_equality";
  report.param("field", ideal.field().to_string())
      .param("nvars", std::to_string(ideal.nvars()))
      .param("ideal", ideal.descriptor())
      .param("k", std::to_string(k))
      .param("representative", rep.to_string());
  report.note("inclusion into (G." + squarefree_prefix(ideal.nvars(), k).to_string() +
              ") verified term by term");

  report.verdict = radical_member(rep_poly, ideal.generators(), options);
  if (report.verdict) {
    if (auto cert = radical_power_certificate(rep_poly, ideal, 8, options)) {
      report.param("power", std::to_string(cert->first));
      report.certificates.push_back(std::move(cert->second));
    } else {
      report.certificates.emplace_back(TextCertificate{"1 lies in (I, 1 - t*" + rep.to_string() +
                                                       ") by a Groebner basis computation"});
    }
    return report;
  }
  auto found = search_points(ideal, [&](WitnessPoint& w) {
    for (const auto& o : targets) {
      const auto poly = Polynomial::monomial(ideal.field(), o);
      if (!evaluate(poly, w.point).is_zero()) {
        w.nonvanishing.push_back(poly);
        return true;
      }
    }
    return false;
  });
  if (found) {
    report.certificates.emplace_back(std::move(found->witness));
  } else {
    report.note("no witness point found in the search pool");
  }
  return report;
}

// ---------------------------------------------------------------------------
// genericity sampling

std::string to_string(GenericProperty property, unsigned k) {
  switch (property) {
    case GenericProperty::IrrelevantRadical: return "irrelevant_radical";
    case GenericProperty::MonomialIdeal: return "monomial_ideal";
    case GenericProperty::RadicalOrbit: return "radical_orbit(" + std::to_string(k) + ")";
  }
  return {};
}

bool generic_property_holds(const Polynomial& f, const PermGroup& group, GenericProperty property, unsigned k,
                            const GroebnerOptions& options) {
  switch (property) {
    case GenericProperty::IrrelevantRadical: {
      const auto gens = orbit(f, group);
      return radical_equals_irrelevant(gens, options);
    }
    case GenericProperty::MonomialIdeal:
      return rank_condition(f, group).verdict;
    case GenericProperty::RadicalOrbit: {
      const OrbitIdeal ideal({f}, group);
      const auto targets = check_orbit_inclusion(ideal, k);
      const Monomial rep = *std::min_element(targets.begin(), targets.end());
      return radical_member(Polynomial::monomial(f.field(), rep), ideal.generators(), options);
    }
  }
  return false;
}

GenericityReport sample_genericity(const GenericitySpec& spec) {
  const auto& A = spec.support;
  const auto& G = spec.group;
  if (A.nvars() != G.degree()) throw DomainError("support and group have different degrees");
  if (spec.coeff_box < 1) throw DomainError("the coefficient box must be at least 1");
  const auto analysis = analyze_support(A);

  GenericityReport report;
  report.support = A.elements();
  report.group = G.descriptor();
  report.property = to_string(spec.property, spec.k);
  report.field = spec.field.to_string();
  report.seed = spec.seed;
  report.coeff_box = spec.coeff_box;
  report.trials = spec.trials;

  std::vector<std::string> violations;
  switch (spec.property) {
    case GenericProperty::IrrelevantRadical:
      if (!analysis.homogeneous) violations.push_back("support is not homogeneous");
      if (!analysis.contains_variable_power) violations.push_back("support contains no power of a variable");
      if (!transitive_on_variables(G)) violations.push_back("group is not transitive on the variables");
      break;
    case GenericProperty::MonomialIdeal:
      if (analysis.types.size() != 1) {
        violations.push_back("support mixes monomial types");
      } else if (!transitive_on_type(G, *analysis.types.begin())) {
        violations.push_back("group is not transitive on monomials of the type");
      }
      break;
    case GenericProperty::RadicalOrbit:
      if (!analysis.homogeneous) violations.push_back("support is not homogeneous");
      if (spec.k != analysis.k_min_positive) {
        violations.push_back("k must equal the minimal number of positive exponents (" +
                             std::to_string(analysis.k_min_positive) + ")");
      }
      if (G.kind() != PermGroup::Kind::Symmetric) report.notes.push_back("group is not the full symmetric group");
      if (A.nvars() < 5) report.notes.push_back("n < 5: outside the stated hypotheses of the theorem");
      if (!analysis.symmetric) {
        report.notes.push_back("support is not symmetric: outside the stated hypotheses of the theorem");
      }
      if (!spec.field.is_rational()) report.notes.push_back("positive characteristic: outside the stated hypotheses");
      break;
  }
  if (!violations.empty()) throw DomainError("hypotheses violated: " + join(violations, "; "));
  if (spec.field.is_prime_field()) {
    report.notes.push_back("finite field: 'general' is only approximated by sampling");
    if (static_cast<std::uint64_t>(spec.coeff_box) >= spec.field.characteristic()) {
      report.notes.push_back("coefficient box reaches the characteristic: some sampled coefficients vanish");
    }
  }

  // draw serially, evaluate in parallel, aggregate by trial index
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<long> dist(0, 2 * spec.coeff_box - 1);
  std::vector<std::vector<long>> draws(spec.trials, std::vector<long>(A.size()));
  for (auto& draw : draws) {
    for (auto& c : draw) {
      const long u = dist(rng);
      c = u < spec.coeff_box ? u - spec.coeff_box : u - spec.coeff_box + 1;
    }
  }
  auto build = [&](const std::vector<long>& coeffs) {
    std::vector<Scalar> scalars;
    for (long c : coeffs) scalars.emplace_back(spec.field, c);
    return A.with_coefficients(scalars);
  };

  std::vector<char> ok(spec.trials, 0);
  std::exception_ptr error;
  const long trials = static_cast<long>(spec.trials);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < trials; ++i) {
    try {
      const Polynomial f = build(draws[static_cast<std::size_t>(i)]);
      ok[static_cast<std::size_t>(i)] =
          !f.is_zero() && generic_property_holds(f, G, spec.property, spec.k, spec.options);
    } catch (...) {
#pragma omp critical(symorb_genericity)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < spec.trials; ++i) {
    if (ok[i]) {
      ++report.successes;
    } else {
      report.failures.push_back(draws[i]);
    }
  }
  for (const auto& [label, coeffs] : spec.probes) {
    if (coeffs.size() != A.size()) throw DomainError("probe '" + label + "' has the wrong length");
    const Polynomial f = build(coeffs);
    const bool success = !f.is_zero() && generic_property_holds(f, G, spec.property, spec.k, spec.options);
    report.probes.push_back({label, coeffs, success});
  }
  return report;
}

}  // namespace symorb
