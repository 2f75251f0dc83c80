#include "symorb/monomial.hpp"

#include <algorithm>
#include <limits>

#include "symorb/errors.hpp"

namespace symorb {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) {
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  if (i < 1 || i > nvars) throw DomainError("variable index x" + std::to_string(i) + " out of range");
  Monomial m(nvars);
  m.set(i - 1, 1);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw DomainError("exponent index out of range");
  if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent too large");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<Exponent>(e);
}

std::size_t Monomial::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(exp_.begin(), exp_.begin() + nvars_, [](Exponent e) { return e > 0; }));
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exp_.begin(), exp_.begin() + nvars_, [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::embed(std::size_t nvars) const {
  if (nvars < nvars_) throw DomainError("cannot embed into fewer variables");
  Monomial m(nvars);
  m.exp_ = exp_;
  m.degree_ = degree_;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw FieldMismatch("monomials over different variable counts");
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    const unsigned e = unsigned{a.exp_[i]} + b.exp_[i];
    if (e > std::numeric_limits<Monomial::Exponent>::max()) throw DomainError("exponent overflow");
    r.exp_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw DomainError("monomial quotient is not exact");
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = static_cast<Monomial::Exponent>(a.exp_[i] - b.exp_[i]);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u ^ exp_[i];
  return h;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(MonomialOrder order) {
  return order == MonomialOrder::Lex ? "lex" : "grevlex";
}

MonomialOrder parse_monomial_order(const std::string& text) {
  if (text == "lex") return MonomialOrder::Lex;
  if (text == "grevlex") return MonomialOrder::GrevLex;
  throw DomainError("unknown monomial order '" + text + "'");
}

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept {
  if (order == MonomialOrder::Lex) return a <=> b;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // reverse lex tie break: the smaller exponent in the last differing
  // variable wins
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

namespace {
void fill_degree(std::size_t nvars, std::size_t pos, unsigned remaining, Monomial& current,
                 std::vector<Monomial>& out) {
  if (pos + 1 == nvars) {
    current.set(pos, remaining);
    out.push_back(current);
    current.set(pos, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current.set(pos, e);
    fill_degree(nvars, pos + 1, remaining - e, current, out);
  }
  current.set(pos, 0);
}
}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial current(nvars);
  fill_degree(nvars, 0, degree, current, out);
  return out;
}

}  // namespace symorb
