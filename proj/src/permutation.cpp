#include "symorb/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "symorb/kernels.hpp"

namespace symorb {

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0 || degree > kMaxVars) throw DomainError("permutation degree out of range");
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), std::uint8_t{0});
  return p;
}

Permutation Permutation::from_images(std::span<const std::size_t> images) {
  Permutation p = identity(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::size_t img = images[i];
    if (img < 1 || img > images.size() || seen[img - 1]) {
      throw DomainError("images do not form a bijection on 1.." + std::to_string(images.size()));
    }
    seen[img - 1] = true;
    p.images_[i] = static_cast<std::uint8_t>(img - 1);
  }
  return p;
}

Permutation Permutation::cycle(std::size_t degree, std::span<const std::size_t> points) {
  Permutation p = identity(degree);
  std::vector<bool> seen(degree, false);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const std::size_t a = points[k];
    if (a < 1 || a > degree) throw DomainError("cycle point " + std::to_string(a) + " out of range");
    if (seen[a - 1]) throw DomainError("cycle repeats point " + std::to_string(a));
    seen[a - 1] = true;
    p.images_[a - 1] = static_cast<std::uint8_t>(points[(k + 1) % points.size()] - 1);
  }
  return p;
}

Permutation Permutation::transposition(std::size_t degree, std::size_t i, std::size_t j) {
  const std::size_t pts[] = {i, j};
  return cycle(degree, pts);
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  Permutation result = identity(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty permutation", pos);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<std::size_t> points;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{}) throw ParseError("expected a point or ')'", pos);
      const std::size_t point_pos = pos;
      pos = static_cast<std::size_t>(ptr - text.data());
      if (value < 1 || value > degree) {
        throw ParseError("point " + std::to_string(value) + " out of range 1.." + std::to_string(degree),
                         point_pos);
      }
      points.push_back(value);
    }
    if (!points.empty()) {
      // cycles compose right to left, as in the product notation
      result = result * cycle(degree, points);
    }
    skip_ws();
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("composing permutations of different degree");
  Permutation r = b;
  for (auto& img : r.images_) img = a.images_[img];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first) out += ' ';
      out += std::to_string(i + 1);
      first = false;
      i = images_[i];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Monomial act(const Permutation& sigma, const Monomial& m) {
  if (sigma.degree() != m.nvars()) throw DomainError("permutation degree differs from variable count");
  Monomial r(m.nvars());
  for (std::size_t i = 1; i <= m.nvars(); ++i) r.set(sigma(i) - 1, m[i - 1]);
  return r;
}

Polynomial act(const Permutation& sigma, const Polynomial& f) {
  if (sigma.degree() != f.nvars()) throw DomainError("permutation degree differs from variable count");
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({act(sigma, t.monomial), t.coefficient});
  return Polynomial::from_terms(f.field(), f.nvars(), std::move(terms));
}

PermGroup::PermGroup(Kind kind, std::size_t degree, std::vector<Permutation> generators,
                     std::size_t bound)
    : kind_(kind), degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree) throw DomainError("generator degree differs from group degree");
  }
  // breadth-first closure under right multiplication by generators
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > bound) {
          throw DomainError("group enumeration exceeds the bound of " + std::to_string(bound) +
                            " elements");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
}

PermGroup PermGroup::symmetric(std::size_t degree, std::size_t bound) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::transposition(degree, 1, 2));
    std::vector<std::size_t> all(degree);
    std::iota(all.begin(), all.end(), std::size_t{1});
    if (degree >= 3) gens.push_back(Permutation::cycle(degree, all));
  }
  return PermGroup(Kind::Symmetric, degree, std::move(gens), bound);
}

PermGroup PermGroup::cyclic(std::size_t degree, std::size_t bound) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<std::size_t> all(degree);
    std::iota(all.begin(), all.end(), std::size_t{1});
    gens.push_back(Permutation::cycle(degree, all));
  }
  return PermGroup(Kind::Cyclic, degree, std::move(gens), bound);
}

PermGroup PermGroup::generated(std::size_t degree, std::vector<Permutation> generators,
                               std::size_t bound) {
  return PermGroup(Kind::Generated, degree, std::move(generators), bound);
}

PermGroup PermGroup::parse(std::string_view text, std::size_t degree_hint, std::size_t bound) {
  auto number = [&](std::string_view digits) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0) {
      throw ParseError("bad group degree '" + std::string(digits) + "'", 1);
    }
    return n;
  };
  if (text.starts_with("gens:")) {
    if (degree_hint == 0) throw DomainError("gens: groups need an explicit variable count");
    std::vector<Permutation> gens;
    std::string_view rest = text.substr(5);
    // generators are separated by commas outside parentheses
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 0; i <= rest.size(); ++i) {
      if (i == rest.size() || (rest[i] == ',' && depth == 0)) {
        auto piece = rest.substr(start, i - start);
        if (!piece.empty()) gens.push_back(Permutation::parse(piece, degree_hint));
        start = i + 1;
      } else if (rest[i] == '(') {
        ++depth;
      } else if (rest[i] == ')' && depth > 0) {
        --depth;
      }
    }
    return generated(degree_hint, std::move(gens), bound);
  }
  if (text.size() >= 2 && text[0] == 'S') return symmetric(number(text.substr(1)), bound);
  if (text.size() >= 2 && text[0] == 'C') return cyclic(number(text.substr(1)), bound);
  throw ParseError("unknown group '" + std::string(text) + "' (expected S<N>, C<N> or gens:...)", 0);
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::string PermGroup::descriptor() const {
  switch (kind_) {
    case Kind::Symmetric:
      return "S" + std::to_string(degree_);
    case Kind::Cyclic:
      return "C" + std::to_string(degree_);
    case Kind::Generated: {
      std::string out = "gens:";
      for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) out += ',';
        out += generators_[i].to_string();
      }
      if (generators_.empty()) out += "()";
      return out;
    }
  }
  return {};
}

std::vector<Polynomial> orbit(const Polynomial& f, const PermGroup& group) {
  if (group.degree() != f.nvars()) throw DomainError("group degree differs from variable count");
  auto images = kernels::omp::act_all(group.elements(), f);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

namespace {

// Extends every injective choice of images for the first n variables to a
// full permutation (remaining points in increasing order) and acts on f.
void collect_selections(const Polynomial& f, std::size_t n, std::vector<std::size_t>& images,
                        std::vector<bool>& used, std::vector<Polynomial>& out) {
  const std::size_t big_n = f.nvars();
  if (images.size() == n) {
    std::vector<std::size_t> full = images;
    for (std::size_t point = 0; point < big_n; ++point) {
      if (!used[point]) full.push_back(point + 1);
    }
    out.push_back(act(Permutation::from_images(full), f));
    return;
  }
  for (std::size_t point = 0; point < big_n; ++point) {
    if (used[point]) continue;
    used[point] = true;
    images.push_back(point + 1);
    collect_selections(f, n, images, used, out);
    images.pop_back();
    used[point] = false;
  }
}

}  // namespace

std::vector<Polynomial> symmetric_orbit(const Polynomial& f) {
  const std::size_t n = f.used_variables();
  if (n == 0) return {f};
  std::vector<Polynomial> images;
  std::vector<std::size_t> prefix;
  std::vector<bool> used(f.nvars(), false);
  collect_selections(f, n, prefix, used, images);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

std::vector<Monomial> orbit(const Monomial& m, const PermGroup& group) {
  std::vector<Monomial> out;
  out.reserve(group.order());
  for (const auto& g : group.elements()) out.push_back(act(g, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Permutation> stabilizer(const Polynomial& f, const PermGroup& group) {
  std::vector<Permutation> out;
  for (const auto& g : group.elements()) {
    if (act(g, f) == f) out.push_back(g);
  }
  return out;
}

bool transitive_on_variables(const PermGroup& group) {
  std::vector<bool> reached(group.degree(), false);
  for (const auto& g : group.elements()) reached[g(1) - 1] = true;
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

std::vector<Monomial> monomials_of_type(const Partition& type, std::size_t nvars) {
  if (type.size() > nvars) return {};
  std::vector<unsigned> exps(nvars, 0);
  std::copy(type.begin(), type.end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  std::vector<Monomial> out;
  do {
    out.push_back(Monomial::from_exponents(exps));
  } while (std::next_permutation(exps.begin(), exps.end()));
  std::sort(out.begin(), out.end());
  return out;
}

bool transitive_on_type(const PermGroup& group, const Partition& type) {
  const auto all = monomials_of_type(type, group.degree());
  if (all.empty()) return false;
  return orbit(all.front(), group).size() == all.size();
}

}  // namespace symorb
