#pragma once

// Data-parallel inner loops. Every kernel exists twice: a serial reference in
// kernels::serial, kept for testing and benchmarking, and the OpenMP version
// in kernels::omp that the library calls. Both produce identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "symorb/polynomial.hpp"

namespace symorb {
class Permutation;
}

namespace symorb::kernels {

using IntMatrix = std::vector<std::vector<mpz_class>>;
using ModMatrix = std::vector<std::vector<std::uint64_t>>;

namespace serial {

/// Fraction-free (Bareiss) forward elimination in place. Pivot rows are the
/// first rows with a nonzero entry in each successive column. Returns the
/// pivot columns; their count is the rank.
std::vector<std::size_t> bareiss_echelon(IntMatrix& m);

/// Gaussian forward elimination over F_p in place; same pivot rule.
std::vector<std::size_t> modp_echelon(ModMatrix& m, std::uint64_t p);

/// sigma.f for every sigma, in input order.
std::vector<Polynomial> act_all(std::span<const Permutation> sigmas, const Polynomial& f);

}  // namespace serial

namespace omp {

std::vector<std::size_t> bareiss_echelon(IntMatrix& m);
std::vector<std::size_t> modp_echelon(ModMatrix& m, std::uint64_t p);
std::vector<Polynomial> act_all(std::span<const Permutation> sigmas, const Polynomial& f);

}  // namespace omp

/// Threads OpenMP would use for a parallel region (1 without OpenMP).
int max_threads();

}  // namespace symorb::kernels
