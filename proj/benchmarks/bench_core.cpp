/* Microbenchmarks for the hot paths: exact row reduction, the fundamental
 * identity sweep, derivation-space assembly and trace induction.  All
 * inputs are deterministic so runs are comparable across machines.
 */
#include <benchmark/benchmark.h>

#include "nlie/algebra.hpp"
#include "nlie/catalog.hpp"
#include "nlie/cohomology.hpp"
#include "nlie/induce.hpp"
#include "nlie/matrix.hpp"

#include <random>
#include <stdexcept>

namespace {

using namespace nlie;

/// Dense matrix of small rationals, reproducible across runs.
Matrix random_matrix(int rows, int cols) {
  std::mt19937_64 rng(0x62656e6368ULL);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<int> den_pick(0, 3);
  const long dens[4] = {1, 1, 2, 3};
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Rational(num(rng), dens[den_pick(rng)]);
  return m;
}

NLieAlgebra catalog_algebra(const char* group, const char* name) {
  const auto e = find_entry(group, name);
  if (!e) throw std::logic_error("benchmark fixture missing from catalog");
  return e->instantiate(e->samples.front());
}

NLieAlgebra gl2() { return catalog_algebra("gl2", "gl2"); }

TraceMap gl2_x4() {
  Vec coeffs(4);
  coeffs[3] = Rational(1);
  return TraceMap{std::move(coeffs)};
}

}  // namespace

static void BM_rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Matrix m = random_matrix(n, 2 * n);
  for (auto _ : state) {
    RrefResult r = rref(m);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_rref)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_fundamental_identity(benchmark::State& state) {
  const NLieAlgebra a = induce(gl2(), gl2_x4());
  for (auto _ : state) {
    auto violations = check_fundamental_identity(a);
    benchmark::DoNotOptimize(violations);
  }
}
BENCHMARK(BM_fundamental_identity);

static void BM_derivation_space(benchmark::State& state) {
  const NLieAlgebra a = induce(gl2(), gl2_x4());
  for (auto _ : state) {
    Subspace d = derivation_space(a);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_derivation_space);

static void BM_induce(benchmark::State& state) {
  const NLieAlgebra a = gl2();
  const TraceMap tau = gl2_x4();
  for (auto _ : state) {
    NLieAlgebra at = induce(a, tau);
    benchmark::DoNotOptimize(at);
  }
}
BENCHMARK(BM_induce);

static void BM_scalar_cocycle_space(benchmark::State& state) {
  const NLieAlgebra a = induce(gl2(), gl2_x4());
  for (auto _ : state) {
    Subspace z = cocycle_space(a, 2, Coefficients::scalar);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_scalar_cocycle_space);

BENCHMARK_MAIN();
