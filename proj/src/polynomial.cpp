#include "symorb/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

namespace symorb {

namespace {

bool term_desc(const Polynomial::Term& a, const Polynomial::Term& b) {
  return b.monomial < a.monomial;
}

}  // namespace

Polynomial::Polynomial(FieldSpec field, std::size_t nvars) : field_(field), nvars_(nvars) {
  if (nvars > kMaxVars) {
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

Polynomial Polynomial::constant(FieldSpec field, std::size_t nvars, const Scalar& c) {
  return term(field, Monomial(nvars), c);
}

Polynomial Polynomial::term(FieldSpec field, const Monomial& m, const Scalar& c) {
  if (!(c.field() == field)) throw FieldMismatch("coefficient field differs from polynomial field");
  Polynomial p(field, m.nvars());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::monomial(FieldSpec field, const Monomial& m) {
  return term(field, m, Scalar::one(field));
}

Polynomial Polynomial::variable(FieldSpec field, std::size_t nvars, std::size_t i) {
  return monomial(field, Monomial::variable(nvars, i));
}

Polynomial Polynomial::from_terms(FieldSpec field, std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(field, nvars);
  for (const auto& t : terms) {
    if (t.monomial.nvars() != nvars) throw FieldMismatch("term has the wrong variable count");
    if (!(t.coefficient.field() == field)) throw FieldMismatch("term coefficient in another field");
  }
  std::sort(terms.begin(), terms.end(), term_desc);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coefficient.is_zero(); });
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree() == 0);
}

bool Polynomial::is_homogeneous() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

std::optional<unsigned> Polynomial::total_degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::optional<unsigned> Polynomial::min_degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  unsigned d = terms_.front().monomial.degree();
  for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
  return d;
}

std::size_t Polynomial::used_variables() const noexcept {
  std::size_t highest = 0;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.monomial[i] > 0) highest = std::max(highest, i + 1);
    }
  }
  return highest;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return key < t.monomial; });
  if (it != terms_.end() && it->monomial == m) return it->coefficient;
  return Scalar::zero(field_);
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.monomial);
  return out;
}

Polynomial Polynomial::homogeneous_part(unsigned degree) const {
  Polynomial p(field_, nvars_);
  for (const auto& t : terms_) {
    if (t.monomial.degree() == degree) p.terms_.push_back(t);
  }
  return p;
}

Polynomial Polynomial::embed(std::size_t nvars) const {
  Polynomial p(field_, nvars);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial.embed(nvars), t.coefficient});
  return p;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatch("polynomials over " + field_.to_string() + " and " +
                        other.field_.to_string());
  }
  if (nvars_ != other.nvars_) {
    throw FieldMismatch("polynomials in " + std::to_string(nvars_) + " and " +
                        std::to_string(other.nvars_) + " variables");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && b->monomial < a->monomial)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || a->monomial < b->monomial) {
      merged.push_back(*b++);
    } else {
      Scalar c = a->coefficient + b->coefficient;
      if (!c.is_zero()) merged.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  std::vector<Polynomial::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      products.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    }
  }
  return Polynomial::from_terms(a.field_, a.nvars_, std::move(products));
}

Polynomial Polynomial::scale(const Scalar& c) const {
  if (!(c.field() == field_)) throw FieldMismatch("scaling by a scalar of another field");
  Polynomial p(field_, nvars_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, t.coefficient * c});
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  if (m.nvars() != nvars_) throw FieldMismatch("multiplier has the wrong variable count");
  Polynomial p = scale(c);
  // multiplying by a monomial preserves the lex order
  for (auto& t : p.terms_) t.monomial = t.monomial * m;
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(field_, nvars_, Scalar::one(field_));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.monomial != t.monomial) return t.monomial < s.monomial;
    if (auto c = s.coefficient <=> t.coefficient; c != 0) return c < 0;
  }
  return a.terms_.size() < b.terms_.size();
}

Scalar evaluate(const Polynomial& f, std::span<const Scalar> point) {
  if (point.size() != f.nvars()) {
    throw FieldMismatch("evaluation point has length " + std::to_string(point.size()) + ", expected " +
                        std::to_string(f.nvars()));
  }
  for (const auto& x : point) {
    if (!(x.field() == f.field())) throw FieldMismatch("evaluation point in another field");
  }
  Scalar sum = Scalar::zero(f.field());
  for (const auto& t : f.terms()) {
    Scalar value = t.coefficient;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      for (unsigned e = 0; e < t.monomial[i]; ++e) value *= point[i];
    }
    sum += value;
  }
  return sum;
}

Polynomial elementary_symmetric(std::size_t nvars, std::span<const std::size_t> subset, unsigned d,
                                FieldSpec field) {
  for (std::size_t idx : subset) {
    if (idx < 1 || idx > nvars) throw DomainError("variable index out of range in subset");
  }
  if (d > subset.size()) throw DomainError("degree exceeds the number of variables");
  std::vector<Polynomial::Term> terms;
  // walk all d-subsets of `subset` through a selection mask
  std::vector<bool> pick(subset.size(), false);
  std::fill(pick.begin(), pick.begin() + d, true);
  do {
    Monomial m(nvars);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (pick[i]) m.set(subset[i] - 1, m[subset[i] - 1] + 1);
    }
    terms.push_back({m, Scalar::one(field)});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return Polynomial::from_terms(field, nvars, std::move(terms));
}

Polynomial elementary_symmetric(std::size_t nvars, std::size_t n, unsigned d, FieldSpec field) {
  if (n > nvars) throw DomainError("e(n,d) needs n <= nvars");
  if (d > n) throw DomainError("e(n,d) needs d <= n");
  std::vector<std::size_t> subset(n);
  std::iota(subset.begin(), subset.end(), std::size_t{1});
  return elementary_symmetric(nvars, subset, d, field);
}

// ---------------------------------------------------------------------------
// text format

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars, FieldSpec field)
      : text_(text), nvars_(nvars), field_(field) {}

  Polynomial parse() {
    std::vector<Polynomial::Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(std::string("expected '+' or '-' but found '") + peek() + "'", pos_);
      }
      first = false;
      auto t = parse_term();
      if (negative) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      skip_ws();
    }
    return Polynomial::from_terms(field_, nvars_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial::Term parse_term() {
    const std::size_t start = pos_;
    Scalar coefficient = Scalar::one(field_);
    bool have_coefficient = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      mpz_class den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        den = mpz_class(digits());
        if (den == 0) throw ParseError("zero denominator", den_pos);
        if (field_.is_prime_field() && reduce_mod(den, field_.characteristic()) == 0) {
          throw ParseError("denominator " + den.get_str() + " is not invertible in " +
                               field_.to_string(),
                           den_pos);
        }
      }
      coefficient = Scalar(field_, num, den);
      have_coefficient = true;
      skip_ws();
    }
    Monomial m(nvars_);
    bool have_factor = false;
    while (!at_end()) {
      const std::size_t save = pos_;
      if (peek() == '*') {
        if (!have_coefficient && !have_factor) throw ParseError("unexpected '*'", pos_);
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') throw ParseError("expected a variable after '*'", pos_);
      }
      if (at_end() || peek() != 'x') {
        pos_ = save;
        break;
      }
      ++pos_;
      const std::size_t index_pos = pos_;
      const unsigned long index = std::stoul(digits());
      if (index < 1 || index > nvars_) {
        throw ParseError("variable x" + std::to_string(index) + " out of range 1.." +
                             std::to_string(nvars_),
                         index_pos);
      }
      unsigned long e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = std::stoul(digits());
        skip_ws();
      }
      m.set(index - 1, m[index - 1] + static_cast<unsigned>(e));
      have_factor = true;
    }
    if (!have_coefficient && !have_factor) throw ParseError("expected a term", start);
    return {m, coefficient};
  }

  std::string_view text_;
  std::size_t nvars_;
  FieldSpec field_;
  std::size_t pos_ = 0;
};

std::vector<Polynomial::Term> sorted_terms(const Polynomial& f, MonomialOrder order) {
  std::vector<Polynomial::Term> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [order](const auto& a, const auto& b) {
    return compare(order, a.monomial, b.monomial) > 0;
  });
  return terms;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, FieldSpec field) {
  return PolyParser(text, nvars, field).parse();
}

std::string format_polynomial(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : sorted_terms(f, order)) {
    std::string magnitude = t.coefficient.to_string();
    bool negative = false;
    if (!magnitude.empty() && magnitude[0] == '-') {
      negative = true;
      magnitude.erase(0, 1);
    }
    std::string body;
    if (t.monomial.degree() == 0) {
      body = magnitude;
    } else if (magnitude == "1") {
      body = t.monomial.to_string();
    } else {
      body = magnitude + "*" + t.monomial.to_string();
    }
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

Polynomial primitive_part(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) return f;
  const auto terms = sorted_terms(f, order);
  if (f.field().is_prime_field()) return f.scale(terms.front().coefficient.inverse());
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& t : terms) {
    const mpq_class& q = t.coefficient.rational();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
  }
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(terms.front().coefficient.rational()) < 0) factor = -factor;
  return f.scale(Scalar::from_rational(factor));
}

std::string format_primitive(const Polynomial& f, MonomialOrder order) {
  return format_polynomial(primitive_part(f, order), order);
}

// ---------------------------------------------------------------------------
// supports

Partition monomial_type(const Monomial& m) {
  Partition p;
  for (auto e : m.exponents()) {
    if (e > 0) p.push_back(e);
  }
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

SupportSet::SupportSet(std::size_t nvars, std::vector<Monomial> elements)
    : nvars_(nvars), elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("a support set must be non-empty");
  for (const auto& m : elements_) {
    if (m.nvars() != nvars_) throw DomainError("support element has the wrong variable count");
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

SupportSet SupportSet::of(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("the zero polynomial has empty support");
  return SupportSet(f.nvars(), f.support());
}

Polynomial SupportSet::with_coefficients(std::span<const Scalar> coefficients) const {
  if (coefficients.size() != elements_.size()) {
    throw DomainError("coefficient vector length differs from support size");
  }
  const FieldSpec field = coefficients.front().field();
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < elements_.size(); ++i) terms.push_back({elements_[i], coefficients[i]});
  return Polynomial::from_terms(field, nvars_, std::move(terms));
}

SupportAnalysis analyze_support(const SupportSet& support) {
  SupportAnalysis a;
  const auto& elems = support.elements();
  const unsigned d0 = elems.front().degree();
  a.homogeneous = std::all_of(elems.begin(), elems.end(),
                              [d0](const Monomial& m) { return m.degree() == d0; });
  if (a.homogeneous) a.degree = d0;
  a.k_min_positive = elems.front().support_size();
  a.squarefree = true;
  a.symmetric = true;
  for (const auto& m : elems) {
    a.k_min_positive = std::min(a.k_min_positive, m.support_size());
    a.squarefree = a.squarefree && m.is_squarefree();
    if (m.support_size() == 1) a.contains_variable_power = true;
    a.types.insert(monomial_type(m));
    // closure under coordinate permutations: every rearrangement must occur
    std::vector<unsigned> exps(m.exponents().begin(), m.exponents().end());
    std::sort(exps.begin(), exps.end());
    do {
      if (!std::binary_search(elems.begin(), elems.end(), Monomial::from_exponents(exps))) {
        a.symmetric = false;
        break;
      }
    } while (a.symmetric && std::next_permutation(exps.begin(), exps.end()));
  }
  return a;
}

}  // namespace symorb
