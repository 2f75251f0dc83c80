// Serial reference kernels against their OpenMP counterparts on identical
// inputs. Each benchmark copies the input matrix per iteration because the
// eliminations work in place.

#include <benchmark/benchmark.h>

#include <random>

#include "symorb/kernels.hpp"
#include "symorb/permutation.hpp"
#include "symorb/polynomial.hpp"

using namespace symorb;

namespace {

kernels::IntMatrix int_matrix(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long> entry(-9, 9);
  kernels::IntMatrix m(n, std::vector<mpz_class>(n));
  for (auto& row : m) {
    for (auto& x : row) x = entry(rng);
  }
  return m;
}

kernels::ModMatrix mod_matrix(std::size_t n, std::uint64_t p) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<std::uint64_t> entry(0, p - 1);
  kernels::ModMatrix m(n, std::vector<std::uint64_t>(n));
  for (auto& row : m) {
    for (auto& x : row) x = entry(rng);
  }
  return m;
}

constexpr std::uint64_t kPrime = 2147483647;

template <auto Kernel>
void bareiss(benchmark::State& state) {
  const auto input = int_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto m = input;
    benchmark::DoNotOptimize(Kernel(m));
  }
}

template <auto Kernel>
void modp(benchmark::State& state) {
  const auto input = mod_matrix(static_cast<std::size_t>(state.range(0)), kPrime);
  for (auto _ : state) {
    auto m = input;
    benchmark::DoNotOptimize(Kernel(m, kPrime));
  }
}

template <auto Kernel>
void act_all(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto group = PermGroup::symmetric(N);
  const auto f = elementary_symmetric(N, N - 1, 3, FieldSpec::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(group.elements(), f));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * group.order()));
}

}  // namespace

BENCHMARK(bareiss<kernels::serial::bareiss_echelon>)->Name("bareiss/serial")->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(bareiss<kernels::omp::bareiss_echelon>)->Name("bareiss/omp")->Arg(32)->Arg(64)->Arg(128)->UseRealTime();
BENCHMARK(modp<kernels::serial::modp_echelon>)->Name("modp/serial")->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(modp<kernels::omp::modp_echelon>)->Name("modp/omp")->Arg(128)->Arg(256)->Arg(512)->UseRealTime();
BENCHMARK(act_all<kernels::serial::act_all>)->Name("act_all/serial")->Arg(6)->Arg(7);
BENCHMARK(act_all<kernels::omp::act_all>)->Name("act_all/omp")->Arg(6)->Arg(7)->UseRealTime();

BENCHMARK_MAIN();
