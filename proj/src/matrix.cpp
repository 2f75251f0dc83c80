#include "symorb/matrix.hpp"

#include <stdexcept>
#include <string>

#include "symorb/kernels.hpp"

namespace symorb {

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

ExactMatrix ExactMatrix::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

ExactMatrix ExactMatrix::from_integers(FieldSpec field, const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Scalar(field, rows[r][c]));
  }
  return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, Scalar value) {
  if (!(value.field() == field_)) throw FieldMismatch("matrix entry from another field");
  if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
  entries_[r * cols_ + c] = std::move(value);
}

std::vector<Scalar> ExactMatrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  }
  return t;
}

std::vector<Scalar> ExactMatrix::multiply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw DomainError("vector length differs from column count");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !x[c].is_zero()) out[r] += at(r, c) * x[c];
    }
  }
  return out;
}

namespace {

// Rows scaled by the lcm of their denominators; row scaling preserves both
// the rank and the solution set of the augmented system.
kernels::IntMatrix integer_rows(const ExactMatrix& m, std::span<const Scalar> extra_column) {
  const bool augmented = !extra_column.empty();
  kernels::IntMatrix out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m.at(r, c).rational().get_den_mpz_t());
    }
    if (augmented) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), extra_column[r].rational().get_den_mpz_t());
    }
    auto& row = out[r];
    row.reserve(m.cols() + (augmented ? 1 : 0));
    auto push = [&](const mpq_class& q) {
      mpz_class v = den / q.get_den() * q.get_num();
      row.push_back(std::move(v));
    };
    for (std::size_t c = 0; c < m.cols(); ++c) push(m.at(r, c).rational());
    if (augmented) push(extra_column[r].rational());
  }
  return out;
}

kernels::ModMatrix residue_rows(const ExactMatrix& m, std::span<const Scalar> extra_column) {
  kernels::ModMatrix out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto& row = out[r];
    row.reserve(m.cols() + 1);
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).residue());
    if (!extra_column.empty()) row.push_back(extra_column[r].residue());
  }
  return out;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.field().is_rational()) {
    auto ints = integer_rows(m, {});
    return kernels::omp::bareiss_echelon(ints).size();
  }
  auto res = residue_rows(m, {});
  return kernels::omp::modp_echelon(res, m.field().characteristic()).size();
}

SpanResult in_span(std::span<const Scalar> v, const ExactMatrix& columns) {
  if (v.size() != columns.rows()) {
    throw DomainError("vector length " + std::to_string(v.size()) + " differs from row count " +
                      std::to_string(columns.rows()));
  }
  const FieldSpec field = columns.field();
  for (const auto& s : v) {
    if (!(s.field() == field)) throw FieldMismatch("vector and matrix over different fields");
  }
  const std::size_t n = columns.cols();
  SpanResult result;
  std::vector<Scalar> x(n, Scalar::zero(field));
  if (columns.rows() == 0) {
    result.member = true;
    result.certificate = std::move(x);
    return result;
  }

  if (field.is_rational()) {
    auto e = integer_rows(columns, v);
    const auto pivots = kernels::omp::bareiss_echelon(e);
    if (!pivots.empty() && pivots.back() == n) return result;
    std::vector<mpq_class> sol(n, mpq_class(0));
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const std::size_t pc = pivots[r];
      mpq_class acc(e[r][n]);
      for (std::size_t k = r + 1; k < pivots.size(); ++k) acc -= mpq_class(e[r][pivots[k]]) * sol[pivots[k]];
      sol[pc] = acc / mpq_class(e[r][pc]);
      sol[pc].canonicalize();
    }
    for (std::size_t c = 0; c < n; ++c) x[c] = Scalar::from_rational(sol[c]);
  } else {
    const std::uint64_t p = field.characteristic();
    auto e = residue_rows(columns, v);
    const auto pivots = kernels::omp::modp_echelon(e, p);
    if (!pivots.empty() && pivots.back() == n) return result;
    std::vector<std::uint64_t> sol(n, 0);
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const std::size_t pc = pivots[r];
      std::uint64_t acc = e[r][n];
      for (std::size_t k = r + 1; k < pivots.size(); ++k) {
        acc = (acc + (p - e[r][pivots[k]]) * sol[pivots[k]]) % p;
      }
      sol[pc] = acc * inverse_mod(e[r][pc], p) % p;
    }
    for (std::size_t c = 0; c < n; ++c) x[c] = Scalar::from_residue(field, sol[c]);
  }

  const auto check = columns.multiply(x);
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (!(check[r] == v[r])) throw std::logic_error("span certificate failed re-verification");
  }
  result.member = true;
  result.certificate = std::move(x);
  return result;
}

}  // namespace symorb
