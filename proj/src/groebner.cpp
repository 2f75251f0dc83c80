#include "symorb/groebner.hpp"

#include <algorithm>
#include <string>

namespace symorb {

namespace {

// ---------------------------------------------------------------------------
// coefficient domains

struct RationalDomain {
  using Elem = mpq_class;

  Elem from(const Scalar& s) const { return s.rational(); }
  Scalar to(const Elem& e) const { return Scalar::from_rational(e); }
  static bool is_zero(const Elem& e) { return sgn(e) == 0; }
  Elem inv(const Elem& e) const { return Elem(1) / e; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  // a - c*b
  Elem submul(const Elem& a, const Elem& c, const Elem& b) const { return a - c * b; }
  Elem negmul(const Elem& c, const Elem& b) const { return -(c * b); }
};

struct PrimeDomain {
  using Elem = std::uint64_t;

  FieldSpec field;
  std::uint64_t p;

  Elem from(const Scalar& s) const { return s.residue(); }
  Scalar to(const Elem& e) const { return Scalar::from_residue(field, e); }
  static bool is_zero(const Elem& e) { return e == 0; }
  Elem inv(const Elem& e) const { return inverse_mod(e, p); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b % p; }
  Elem submul(const Elem& a, const Elem& c, const Elem& b) const { return (a + p - c * b % p) % p; }
  Elem negmul(const Elem& c, const Elem& b) const { return (p - c * b % p) % p; }
};

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] > 0) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

template <class D>
struct IPoly {
  std::vector<Monomial> mons;  // descending in the engine's order
  std::vector<typename D::Elem> coeffs;

  std::size_t size() const { return mons.size(); }
  bool empty() const { return mons.empty(); }
  void push(const Monomial& m, typename D::Elem c) {
    mons.push_back(m);
    coeffs.push_back(std::move(c));
  }
};

template <class D>
class Engine {
 public:
  using Elem = typename D::Elem;
  using Poly = IPoly<D>;

  struct QuotientTerm {
    std::size_t divisor;
    Monomial multiplier;
    Elem coefficient;
  };

  Engine(D dom, MonomialOrder order, FieldSpec field, std::size_t nvars)
      : dom_(std::move(dom)), order_(order), field_(field), nvars_(nvars) {}

  bool greater(const Monomial& a, const Monomial& b) const { return compare(order_, a, b) > 0; }

  Poly import(const Polynomial& f) const {
    std::vector<std::size_t> idx(f.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    const auto terms = f.terms();
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return greater(terms[a].monomial, terms[b].monomial); });
    Poly p;
    p.mons.reserve(idx.size());
    p.coeffs.reserve(idx.size());
    for (std::size_t i : idx) p.push(terms[i].monomial, dom_.from(terms[i].coefficient));
    return p;
  }

  Polynomial export_poly(const Poly& p) const {
    std::vector<Polynomial::Term> terms;
    terms.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) terms.push_back({p.mons[i], dom_.to(p.coeffs[i])});
    return Polynomial::from_terms(field_, nvars_, std::move(terms));
  }

  void make_monic(Poly& p) const {
    if (p.empty()) return;
    const Elem inv = dom_.inv(p.coeffs[0]);
    for (auto& c : p.coeffs) c = dom_.mul(c, inv);
  }

  // a[a_from..] - c * m * b[b_from..]
  Poly sub_scaled(const Poly& a, std::size_t a_from, const Elem& c, const Monomial& m, const Poly& b,
                  std::size_t b_from) const {
    Poly r;
    r.mons.reserve(a.size() - a_from + b.size() - b_from);
    r.coeffs.reserve(r.mons.capacity());
    std::size_t i = a_from;
    std::size_t j = b_from;
    Monomial bm;
    if (j < b.size()) bm = b.mons[j] * m;
    while (i < a.size() || j < b.size()) {
      if (j >= b.size()) {
        r.push(a.mons[i], a.coeffs[i]);
        ++i;
        continue;
      }
      if (i >= a.size()) {
        r.push(bm, dom_.negmul(c, b.coeffs[j]));
        if (++j < b.size()) bm = b.mons[j] * m;
        continue;
      }
      const auto cmp = compare(order_, a.mons[i], bm);
      if (cmp > 0) {
        r.push(a.mons[i], a.coeffs[i]);
        ++i;
      } else if (cmp < 0) {
        r.push(bm, dom_.negmul(c, b.coeffs[j]));
        if (++j < b.size()) bm = b.mons[j] * m;
      } else {
        Elem v = dom_.submul(a.coeffs[i], c, b.coeffs[j]);
        if (!D::is_zero(v)) r.push(a.mons[i], std::move(v));
        ++i;
        if (++j < b.size()) bm = b.mons[j] * m;
      }
    }
    return r;
  }

  // Monic f, g.
  Poly spoly(const Poly& f, const Poly& g) const {
    const Monomial l = lcm(f.mons[0], g.mons[0]);
    const Monomial mf = l / f.mons[0];
    const Monomial mg = l / g.mons[0];
    Poly fm;
    fm.mons.reserve(f.size());
    fm.coeffs = f.coeffs;
    for (const auto& mon : f.mons) fm.mons.push_back(mon * mf);
    return sub_scaled(fm, 1, Elem(1), mg, g, 1);
  }

  // Full reduction by monic divisors; optionally records the quotient terms.
  Poly reduce(Poly p, const std::vector<const Poly*>& divisors, const std::vector<std::uint32_t>& masks,
              std::vector<QuotientTerm>* quotient = nullptr) const {
    Poly rem;
    std::size_t s = 0;
    while (s < p.size()) {
      const Monomial& lm = p.mons[s];
      const std::uint32_t lm_mask = support_mask(lm);
      const Poly* divisor = nullptr;
      std::size_t which = 0;
      for (std::size_t k = 0; k < divisors.size(); ++k) {
        if ((masks[k] & ~lm_mask) != 0) continue;
        if (divisors[k]->mons[0].divides(lm)) {
          divisor = divisors[k];
          which = k;
          break;
        }
      }
      if (divisor == nullptr) {
        rem.push(lm, p.coeffs[s]);
        ++s;
        continue;
      }
      const Monomial m = lm / divisor->mons[0];
      const Elem c = p.coeffs[s];
      if (quotient) quotient->push_back({which, m, c});
      p = sub_scaled(p, s + 1, c, m, *divisor, 1);
      s = 0;
    }
    return rem;
  }

  const D& domain() const { return dom_; }

 private:
  D dom_;
  MonomialOrder order_;
  FieldSpec field_;
  std::size_t nvars_;
};

// ---------------------------------------------------------------------------
// Buchberger

template <class D>
class Buchberger {
 public:
  using Poly = IPoly<D>;

  Buchberger(const Engine<D>& engine, const GroebnerOptions& options)
      : engine_(engine), options_(options) {}

  std::vector<Poly> run(const std::vector<Polynomial>& generators) {
    std::vector<Poly> input;
    for (const auto& g : generators) {
      if (!g.is_zero()) input.push_back(engine_.import(g));
    }
    std::sort(input.begin(), input.end(), [&](const Poly& a, const Poly& b) {
      return engine_.greater(b.mons[0], a.mons[0]);
    });
    for (auto& g : input) {
      if (unit_found_) break;
      consider(std::move(g));
    }

    while (!pairs_.empty() && !unit_found_) {
      const std::size_t best = select_pair();
      Pair pair = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (options_.degree_bound && pair.lcm.degree() > *options_.degree_bound) {
        ++stats_.pairs_skipped_by_degree;
        continue;
      }
      if (++stats_.pairs_reduced > options_.max_pairs) {
        throw BudgetExceeded("S-pair budget of " + std::to_string(options_.max_pairs) + " exceeded");
      }
      if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline) {
        throw BudgetExceeded("wall-clock budget exceeded after " +
                             std::to_string(stats_.pairs_reduced) + " S-pairs");
      }
      consider(engine_.spoly(polys_[pair.i], polys_[pair.j]));
    }

    if (unit_found_) return {unit_};
    return interreduce();
  }

  const GroebnerStats& stats() const { return stats_; }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };

  void consider(Poly p) {
    Poly h = engine_.reduce(std::move(p), active_polys_, active_masks_);
    if (h.empty()) {
      ++stats_.zero_reductions;
      return;
    }
    engine_.make_monic(h);
    if (h.mons[0].degree() == 0 && options_.stop_on_unit) {
      unit_found_ = true;
      unit_ = std::move(h);
      return;
    }
    add(std::move(h));
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      const auto c = compare(engine_order(), a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  MonomialOrder engine_order() const { return order_; }

  // Gebauer-Moeller update for a new basis element h.
  void add(Poly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].mons[0];

    std::vector<Pair> candidates;
    for (std::size_t g : active_) candidates.push_back({g, hi, lcm(polys_[g].mons[0], lh)});
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool keep = lh.coprime(polys_[p.i].mons[0]);
      if (!keep) {
        auto divides_lcm = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
        keep = std::none_of(candidates.begin() + static_cast<std::ptrdiff_t>(k) + 1, candidates.end(),
                            divides_lcm) &&
               std::none_of(kept.begin(), kept.end(), divides_lcm);
      }
      if (keep) kept.push_back(p);
    }
    std::erase_if(kept, [&](const Pair& p) { return lh.coprime(polys_[p.i].mons[0]); });

    std::erase_if(pairs_, [&](const Pair& p) {
      return lh.divides(p.lcm) && lcm(polys_[p.i].mons[0], lh) != p.lcm &&
             lcm(polys_[p.j].mons[0], lh) != p.lcm;
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    std::erase_if(active_, [&](std::size_t g) { return lh.divides(polys_[g].mons[0]); });
    active_.push_back(hi);
    rebuild_divisors();
  }

  void rebuild_divisors() {
    active_polys_.clear();
    active_masks_.clear();
    for (std::size_t g : active_) {
      active_polys_.push_back(&polys_[g]);
      active_masks_.push_back(support_mask(polys_[g].mons[0]));
    }
  }

  std::vector<Poly> interreduce() {
    std::vector<Poly> basis;
    for (std::size_t g : active_) basis.push_back(polys_[g]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const Poly*> others;
      std::vector<std::uint32_t> masks;
      for (std::size_t o = 0; o < basis.size(); ++o) {
        if (o == k) continue;
        others.push_back(&basis[o]);
        masks.push_back(support_mask(basis[o].mons[0]));
      }
      Poly tail;
      tail.mons.assign(basis[k].mons.begin() + 1, basis[k].mons.end());
      tail.coeffs.assign(basis[k].coeffs.begin() + 1, basis[k].coeffs.end());
      Poly reduced = engine_.reduce(std::move(tail), others, masks);
      Poly full;
      full.push(basis[k].mons[0], basis[k].coeffs[0]);
      for (std::size_t t = 0; t < reduced.size(); ++t) full.push(reduced.mons[t], reduced.coeffs[t]);
      basis[k] = std::move(full);
    }
    std::sort(basis.begin(), basis.end(),
              [&](const Poly& a, const Poly& b) { return engine_.greater(b.mons[0], a.mons[0]); });
    return basis;
  }

 public:
  void set_order(MonomialOrder order) { order_ = order; }

 private:
  const Engine<D>& engine_;
  const GroebnerOptions& options_;
  MonomialOrder order_ = MonomialOrder::GrevLex;
  std::vector<Poly> polys_;
  std::vector<std::size_t> active_;
  std::vector<const Poly*> active_polys_;
  std::vector<std::uint32_t> active_masks_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
  bool unit_found_ = false;
  Poly unit_;
};

void check_generators(std::span<const Polynomial> generators) {
  if (generators.empty()) throw DomainError("need at least one generator");
  for (const auto& g : generators) {
    if (!(g.field() == generators.front().field()) || g.nvars() != generators.front().nvars()) {
      throw FieldMismatch("generators over different fields or variable counts");
    }
  }
}

template <class D>
GroebnerBasis run_buchberger(D dom, std::span<const Polynomial> generators, MonomialOrder order,
                             const GroebnerOptions& options) {
  const FieldSpec field = generators.front().field();
  const std::size_t nvars = generators.front().nvars();
  Engine<D> engine(std::move(dom), order, field, nvars);
  Buchberger<D> algo(engine, options);
  algo.set_order(order);
  std::vector<Polynomial> sources(generators.begin(), generators.end());
  auto basis = algo.run(sources);
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(engine.export_poly(b));
  return GroebnerBasis(order, field, nvars, std::move(out), std::move(sources), options.degree_bound,
                       algo.stats());
}

template <class D>
Division run_division(D dom, const Polynomial& f, const GroebnerBasis& basis) {
  Engine<D> engine(std::move(dom), basis.order(), basis.field(), basis.nvars());
  std::vector<IPoly<D>> imported;
  imported.reserve(basis.basis().size());
  for (const auto& b : basis.basis()) imported.push_back(engine.import(b));
  std::vector<const IPoly<D>*> divisors;
  std::vector<std::uint32_t> masks;
  for (const auto& b : imported) {
    divisors.push_back(&b);
    masks.push_back(support_mask(b.mons[0]));
  }
  std::vector<typename Engine<D>::QuotientTerm> trace;
  auto rem = engine.reduce(engine.import(f), divisors, masks, &trace);
  std::vector<std::vector<Polynomial::Term>> qterms(imported.size());
  for (const auto& t : trace) {
    qterms[t.divisor].push_back({t.multiplier, engine.domain().to(t.coefficient)});
  }
  Division out{{}, engine.export_poly(rem)};
  for (auto& terms : qterms) {
    out.quotients.push_back(Polynomial::from_terms(basis.field(), basis.nvars(), std::move(terms)));
  }
  return out;
}

void check_against_basis(const Polynomial& f, const GroebnerBasis& basis) {
  if (!(f.field() == basis.field()) || f.nvars() != basis.nvars()) {
    throw FieldMismatch("polynomial and basis over different rings");
  }
}

}  // namespace

GroebnerBasis::GroebnerBasis(MonomialOrder order, FieldSpec field, std::size_t nvars,
                             std::vector<Polynomial> basis, std::vector<Polynomial> sources,
                             std::optional<unsigned> degree_bound, GroebnerStats stats)
    : order_(order),
      field_(field),
      nvars_(nvars),
      basis_(std::move(basis)),
      sources_(std::move(sources)),
      degree_bound_(degree_bound),
      stats_(stats) {}

bool GroebnerBasis::is_unit_ideal() const {
  return basis_.size() == 1 && basis_.front().is_constant() && !basis_.front().is_zero();
}

Monomial leading_monomial(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) throw DomainError("the zero polynomial has no leading monomial");
  const auto terms = f.terms();
  const Polynomial::Term* best = &terms[0];
  for (const auto& t : terms) {
    if (compare(order, t.monomial, best->monomial) > 0) best = &t;
  }
  return best->monomial;
}

Scalar leading_coefficient(const Polynomial& f, MonomialOrder order) {
  return f.coefficient(leading_monomial(f, order));
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, MonomialOrder order,
                         const GroebnerOptions& options) {
  check_generators(generators);
  const FieldSpec field = generators.front().field();
  if (options.degree_bound) {
    for (const auto& g : generators) {
      if (!g.is_homogeneous()) throw DomainError("a degree bound needs homogeneous generators");
    }
  }
  if (field.is_rational()) return run_buchberger(RationalDomain{}, generators, order, options);
  return run_buchberger(PrimeDomain{field, field.characteristic()}, generators, order, options);
}

Division divide(const Polynomial& f, const GroebnerBasis& basis) {
  check_against_basis(f, basis);
  if (basis.basis().empty()) {
    return Division{{}, f};
  }
  if (f.field().is_rational()) return run_division(RationalDomain{}, f, basis);
  return run_division(PrimeDomain{f.field(), f.field().characteristic()}, f, basis);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  return divide(f, basis).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const Monomial lf = leading_monomial(f, order);
  const Monomial lg = leading_monomial(g, order);
  const Monomial l = lcm(lf, lg);
  return f.mul_term(l / lf, leading_coefficient(f, order).inverse()) -
         g.mul_term(l / lg, leading_coefficient(g, order).inverse());
}

namespace {

Polynomial reference_reduce(Polynomial p, std::span<const Polynomial> basis, MonomialOrder order) {
  Polynomial remainder(p.field(), p.nvars());
  while (!p.is_zero()) {
    const Monomial lm = leading_monomial(p, order);
    const Scalar lc = p.coefficient(lm);
    const Polynomial* divisor = nullptr;
    for (const auto& b : basis) {
      if (leading_monomial(b, order).divides(lm)) {
        divisor = &b;
        break;
      }
    }
    if (divisor) {
      const Monomial lb = leading_monomial(*divisor, order);
      p -= divisor->mul_term(lm / lb, lc / divisor->coefficient(lb));
    } else {
      const Polynomial lead = Polynomial::term(p.field(), lm, lc);
      remainder += lead;
      p -= lead;
    }
  }
  return remainder;
}

}  // namespace

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, MonomialOrder order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!reference_reduce(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
    }
  }
  return true;
}

bool ideal_member(const Polynomial& f, std::span<const Polynomial> generators, MonomialOrder order,
                  const GroebnerOptions& options) {
  check_generators(generators);
  if (!(f.field() == generators.front().field()) || f.nvars() != generators.front().nvars()) {
    throw FieldMismatch("polynomial and generators over different rings");
  }
  if (f.is_zero()) return true;
  GroebnerOptions opts = options;
  const bool homogeneous = f.is_homogeneous() &&
                           std::all_of(generators.begin(), generators.end(),
                                       [](const Polynomial& g) { return g.is_homogeneous(); });
  if (homogeneous && !opts.degree_bound) opts.degree_bound = *f.total_degree();
  if (!homogeneous) opts.degree_bound.reset();
  const auto basis = buchberger(generators, order, opts);
  return normal_form(f, basis).is_zero();
}

bool radical_member(const Polynomial& f, std::span<const Polynomial> generators,
                    const GroebnerOptions& options) {
  check_generators(generators);
  if (!(f.field() == generators.front().field()) || f.nvars() != generators.front().nvars()) {
    throw FieldMismatch("polynomial and generators over different rings");
  }
  if (f.is_zero()) return true;
  const FieldSpec field = f.field();
  const std::size_t n = f.nvars() + 1;
  std::vector<Polynomial> extended;
  extended.reserve(generators.size() + 1);
  for (const auto& g : generators) extended.push_back(g.embed(n));
  const Polynomial t = Polynomial::variable(field, n, n);
  extended.push_back(Polynomial::constant(field, n, Scalar::one(field)) - t * f.embed(n));
  GroebnerOptions opts = options;
  opts.degree_bound.reset();
  opts.stop_on_unit = true;
  return buchberger(extended, MonomialOrder::GrevLex, opts).is_unit_ideal();
}

bool radical_equals_irrelevant(std::span<const Polynomial> generators, const GroebnerOptions& options) {
  check_generators(generators);
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw DomainError("radical_equals_irrelevant needs homogeneous generators");
    if (*g.total_degree() == 0) throw DomainError("generators must have positive degree");
  }
  const auto& g0 = generators.front();
  for (std::size_t i = 1; i <= g0.nvars(); ++i) {
    if (!radical_member(Polynomial::variable(g0.field(), g0.nvars(), i), generators, options)) return false;
  }
  return true;
}

}  // namespace symorb
