#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symorb/field.hpp"

namespace symorb {

/// Dense row-major matrix of exact scalars over one field.
class ExactMatrix {
 public:
  ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static ExactMatrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows);
  static ExactMatrix from_integers(FieldSpec field, const std::vector<std::vector<long>>& rows);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar value);

  std::vector<Scalar> column(std::size_t c) const;
  ExactMatrix transpose() const;
  /// M x.
  std::vector<Scalar> multiply(std::span<const Scalar> x) const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Exact rank: Bareiss elimination over Q, plain elimination over F_p.
std::size_t rank(const ExactMatrix& m);

struct SpanResult {
  bool member = false;
  /// Combination coefficients x with columns * x = v; present iff member.
  /// Free variables are set to zero.
  std::optional<std::vector<Scalar>> certificate;
};

/// Decides whether v is a linear combination of the columns of `columns`.
/// Positive answers carry a certificate that has been re-verified.
SpanResult in_span(std::span<const Scalar> v, const ExactMatrix& columns);

}  // namespace symorb
