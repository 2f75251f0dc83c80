#include <omp.h>

#include "symorb/kernels.hpp"
#include "symorb/permutation.hpp"

namespace symorb::kernels {

int max_threads() { return omp_get_max_threads(); }

namespace omp {

namespace {
// below this many row-updates per step the fork/join overhead dominates
constexpr std::size_t kMinParallelWork = 4096;
}  // namespace

std::vector<std::size_t> bareiss_echelon(IntMatrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  if (rows == 0) return pivots;
  const std::size_t cols = m.front().size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const auto& pivot_row = m[r];
    const mpz_class& piv = pivot_row[c];
    const auto first = static_cast<std::int64_t>(r + 1);
    const auto last = static_cast<std::int64_t>(rows);
    const bool parallel = (rows - r) * (cols - c) >= kMinParallelWork;
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (std::int64_t i = first; i < last; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      mpz_class tmp;
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), piv.get_mpz_t());
        mpz_mul(tmp.get_mpz_t(), row[c].get_mpz_t(), pivot_row[j].get_mpz_t());
        mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), tmp.get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> modp_echelon(ModMatrix& m, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  if (rows == 0) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t k = r;
    while (k < rows && m[k][c] == 0) ++k;
    if (k == rows) continue;
    std::swap(m[k], m[r]);
    const auto& pivot_row = m[r];
    const std::uint64_t inv = inverse_mod(pivot_row[c], p);
    const auto first = static_cast<std::int64_t>(r + 1);
    const auto last = static_cast<std::int64_t>(rows);
    const bool parallel = (rows - r) * (cols - c) >= 8 * kMinParallelWork;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t i = first; i < last; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      if (row[c] == 0) continue;
      const std::uint64_t factor = row[c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) {
        row[j] = (row[j] + (p - factor) * pivot_row[j]) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Polynomial> act_all(std::span<const Permutation> sigmas, const Polynomial& f) {
  std::vector<Polynomial> out(sigmas.size(), Polynomial(f.field(), f.nvars()));
  const auto n = static_cast<std::int64_t>(sigmas.size());
#pragma omp parallel for schedule(static) if (n >= 256)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = act(sigmas[static_cast<std::size_t>(i)], f);
  }
  return out;
}

}  // namespace omp
}  // namespace symorb::kernels
