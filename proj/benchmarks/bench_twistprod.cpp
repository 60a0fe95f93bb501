#include <benchmark/benchmark.h>

#include <random>

#include "twistprod/curvature.hpp"
#include "twistprod/finite_group.hpp"
#include "twistprod/parametric.hpp"
#include "twistprod/builtins.hpp"

using namespace twistprod;

namespace {

LieAlgebra nilpotent_of_dim(int dim) {
  const int p = std::max(2, 2 * dim / 3);
  return random_two_step_nilpotent(p, dim - p, 0xBECull + dim);
}

void BM_sectional_curvatures(benchmark::State& state) {
  const LieAlgebra alg = nilpotent_of_dim(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sectional_curvatures(alg));
}
BENCHMARK(BM_sectional_curvatures)->Arg(6)->Arg(8)->Arg(12)->Arg(16);

void BM_check_jacobi(benchmark::State& state) {
  const LieAlgebra alg = nilpotent_of_dim(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobi(alg));
}
BENCHMARK(BM_check_jacobi)->Arg(6)->Arg(10);

void BM_build_inner_twist(benchmark::State& state) {
  const LieAlgebra alg = nilpotent_of_dim(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_inner_twist(alg));
}
BENCHMARK(BM_build_inner_twist)->Arg(4)->Arg(8);

void BM_build_twisted_algebra(benchmark::State& state) {
  const BuiltinBundle b = builtin("e2_star_e2_skew");
  for (auto _ : state) benchmark::DoNotOptimize(build_twisted_algebra(*b.twist));
}
BENCHMARK(BM_build_twisted_algebra);

void BM_twisted_product_q8(benchmark::State& state) {
  const CayleyGroup q8 = quaternion_group();
  const GroupAction inner = inner_action(q8);
  for (auto _ : state) benchmark::DoNotOptimize(twisted_product(q8, q8, inner, inner));
}
BENCHMARK(BM_twisted_product_q8);

void BM_validate_group_order64(benchmark::State& state) {
  const CayleyGroup q8 = quaternion_group();
  const GroupAction inner = inner_action(q8);
  const CayleyGroup table = *twisted_product(q8, q8, inner, inner).table;
  for (auto _ : state) benchmark::DoNotOptimize(validate_group(table));
}
BENCHMARK(BM_validate_group_order64);

void BM_enumerate_actions_s3_on_q8(benchmark::State& state) {
  const CayleyGroup s3 = symmetric_group_3();
  const CayleyGroup q8 = quaternion_group();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_actions(s3, q8));
}
BENCHMARK(BM_enumerate_actions_s3_on_q8);

void BM_derive_infinitesimal_action(benchmark::State& state) {
  const BuiltinBundle b = builtin("e2_star_e2_canonical");
  for (auto _ : state)
    benchmark::DoNotOptimize(derive_infinitesimal_action(*b.smooth_lambda, b.basis_h, b.basis_g));
}
BENCHMARK(BM_derive_infinitesimal_action);

}  // namespace

BENCHMARK_MAIN();
