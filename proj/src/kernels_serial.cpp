#include "symorb/kernels.hpp"
#include "symorb/permutation.hpp"

namespace symorb::kernels::serial {

std::vector<std::size_t> bareiss_echelon(IntMatrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  if (rows == 0) return pivots;
  const std::size_t cols = m.front().size();
  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpz_class& piv = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto& row = m[i];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), piv.get_mpz_t());
        mpz_mul(tmp.get_mpz_t(), row[c].get_mpz_t(), m[r][j].get_mpz_t());
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
    const std::uint64_t inv = inverse_mod(m[r][c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      auto& row = m[i];
      if (row[c] == 0) continue;
      const std::uint64_t factor = row[c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) {
        row[j] = (row[j] + (p - factor) * m[r][j]) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Polynomial> act_all(std::span<const Permutation> sigmas, const Polynomial& f) {
  std::vector<Polynomial> out;
  out.reserve(sigmas.size());
  for (const auto& s : sigmas) out.push_back(act(s, f));
  return out;
}

}  // namespace symorb::kernels::serial
