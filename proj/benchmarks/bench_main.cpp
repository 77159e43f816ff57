// Microbenchmarks for the hot paths: blade arithmetic, versor actions,
// membership predicates, and the finite-group machinery.

#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "magsq/catalog.hpp"
#include "magsq/clifford.hpp"
#include "magsq/finitegrp.hpp"
#include "magsq/quadratic.hpp"
#include "magsq/quatmat.hpp"
#include "magsq/rng.hpp"

namespace {

using namespace magsq;

Multivector dense_multivector(Rng& rng, const QuadraticForm& form) {
  Multivector x(form);
  const auto dim = std::uint32_t{1} << form.dimension();
  for (std::uint32_t mask = 0; mask < dim; ++mask)
    x = x + Multivector::blade(form, mask, rng.uniform(-1.0, 1.0));
  return x;
}

Multivector sample_versor(Rng& rng, const QuadraticForm& form, int factors) {
  const auto vector_factor = [&] {
    while (true) {
      Vec v(static_cast<std::size_t>(form.dimension()));
      for (auto& c : v) c = rng.uniform(-1.0, 1.0);
      if (std::abs(form.evaluate(v)) > 0.3) return Multivector::from_vector(form, v);
    }
  };
  Multivector u = vector_factor();
  for (int t = 1; t < factors; ++t) u = u * vector_factor();
  return u;
}

void BM_GeometricProductDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuadraticForm form(n, 0);
  Rng rng(7);
  const Multivector a = dense_multivector(rng, form);
  const Multivector b = dense_multivector(rng, form);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProductDense)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_GeometricProductSplitSignature(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  const QuadraticForm form(half, half);
  Rng rng(7);
  const Multivector a = dense_multivector(rng, form);
  const Multivector b = dense_multivector(rng, form);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProductSplitSignature)->Arg(1)->Arg(2)->Arg(3);

void BM_OrthogonalAction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const QuadraticForm form(n, 0);
  Rng rng(11);
  const Multivector u = sample_versor(rng, form, n);
  for (auto _ : state) benchmark::DoNotOptimize(orthogonal_action(u));
}
BENCHMARK(BM_OrthogonalAction)->Arg(3)->Arg(4)->Arg(5);

void BM_PinMembership(benchmark::State& state) {
  const QuadraticForm form(3, 0);
  Rng rng(13);
  const Multivector u = sample_versor(rng, form, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(pin_membership(u, PinVariant::Big));
}
BENCHMARK(BM_PinMembership);

void BM_RhoTilde(benchmark::State& state) {
  const Mat2C a = lambda_embed(Quaternion{0.5, 0.5, 0.5, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(rho_tilde(a));
}
BENCHMARK(BM_RhoTilde);

void BM_ClosureBinaryGroup(benchmark::State& state) {
  const auto name = static_cast<BinaryGroupName>(state.range(0));
  const auto gens = builtin_binary_generators(name);
  for (auto _ : state) benchmark::DoNotOptimize(closure(gens));
}
BENCHMARK(BM_ClosureBinaryGroup)
    ->Arg(static_cast<int>(BinaryGroupName::Q8))
    ->Arg(static_cast<int>(BinaryGroupName::BinaryOctahedral))
    ->Arg(static_cast<int>(BinaryGroupName::BinaryIcosahedral));

void BM_WittRootCheck(benchmark::State& state) {
  const auto group =
      closure(builtin_binary_generators(BinaryGroupName::BinaryIcosahedral));
  for (auto _ : state) benchmark::DoNotOptimize(witt_root_check(group));
}
BENCHMARK(BM_WittRootCheck);

void BM_VerifyMagicSquare(benchmark::State& state) {
  const auto roots = builtin_roots(ReflectionGroupName::B3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_magic_square(roots));
}
BENCHMARK(BM_VerifyMagicSquare);

}  // namespace

BENCHMARK_MAIN();
