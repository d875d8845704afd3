#include "itcalc/homotopy.hpp"
#include "itcalc/itcore.hpp"
#include "itcalc/relstruct.hpp"

#include <benchmark/benchmark.h>

using namespace itcalc;

namespace {

// k[x]/x^n
AlgebraPtr truncated_loop(int n, std::uint32_t p) {
  return build_algebra(Quiver{1, {{"x", 0, 0}}}, p, {std::vector<int>(static_cast<std::size_t>(n), 0)});
}

// linear A_n with all length-2 paths zero
AlgebraPtr radical_square_zero(int n, std::uint32_t p) {
  Quiver q{n, {}};
  std::vector<std::vector<int>> rels;
  for (int i = 0; i + 1 < n; ++i) q.arrows.push_back({"a" + std::to_string(i), i, i + 1});
  for (int i = 0; i + 2 < n; ++i) rels.push_back({i, i + 1});
  return build_algebra(q, p, rels);
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PrimeField f(3);
  Mat m(n, n, f);
  std::uint64_t x = 7;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<Residue>((x = x * 6364136223846793005ULL + 1) >> 62) % 3;
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(64)->Arg(128);

void BM_HomSpace(benchmark::State& state) {
  auto a = truncated_loop(static_cast<int>(state.range(0)), 2);
  const Rep m = regular_module(a);
  const Rep n = power(m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hom_space(m, n).dim());
}
BENCHMARK(BM_HomSpace)->Arg(3)->Arg(6)->Arg(10);

void BM_Decompose(benchmark::State& state) {
  auto a = radical_square_zero(static_cast<int>(state.range(0)), 2);
  std::vector<Rep> parts;
  for (int v = 0; v < a->vertex_count(); ++v) {
    parts.push_back(projective(a, v));
    parts.push_back(simple(a, v));
  }
  const Rep m = direct_sum(parts);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m).size());
}
BENCHMARK(BM_Decompose)->Arg(3)->Arg(5);

void BM_OmegaF(benchmark::State& state) {
  auto a = truncated_loop(4, 3);
  const RelStructure f(a, projective_quotient(a, 0, 2));
  const Rep m = direct_sum({simple(a, 0), projective_quotient(a, 0, 3)});
  for (auto _ : state) benchmark::DoNotOptimize(omega_F(f, m).total_dim());
}
BENCHMARK(BM_OmegaF);

void BM_PhiDimNakayama(benchmark::State& state) {
  auto a = radical_square_zero(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    Registry reg{RelStructure(a)};
    benchmark::DoNotOptimize(phi_dim(reg, Family{true, {}}, kDefaultHorizon).value);
  }
}
BENCHMARK(BM_PhiDimNakayama)->Arg(3)->Arg(6);

void BM_HomotopyHomDim(benchmark::State& state) {
  auto a = radical_square_zero(3, 2);
  const Rep p1 = projective(a, 0);
  const Embedded r = radical(p1);
  const Complex c(a, -1, {r.module, p1}, {r.inclusion});
  for (auto _ : state) benchmark::DoNotOptimize(homotopy_hom_dim(c, c, 0));
}
BENCHMARK(BM_HomotopyHomDim);

}  // namespace

BENCHMARK_MAIN();
