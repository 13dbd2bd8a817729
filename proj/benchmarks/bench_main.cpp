#include <benchmark/benchmark.h>

#include <random>

#include "qcert/local_certify.hpp"
#include "qcert/modpoly.hpp"
#include "qcert/perm_group.hpp"

using namespace qcert;

namespace {

BigRat corollary_s(long u) { return BigRat(27 * 86) * u * u * u; }

void BM_factorize_n1(benchmark::State& state)
{
  BigInt n("764457282897630253");
  for (auto _ : state)
    benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_factorize_n1)->Unit(benchmark::kMicrosecond);

// 11 for u = 11 is the ~30 digit kernel
void BM_factorize_kernel(benchmark::State& state)
{
  BigInt k = corollary_quad_disc(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(factorize(k));
}
BENCHMARK(BM_factorize_kernel)->Arg(1)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_factor_mod_p(benchmark::State& state)
{
  std::mt19937_64 rng(1);
  BigInt p = state.range(0);
  std::uniform_int_distribution<long> coef(0, 1'000'000);
  std::vector<ModPoly> polys;
  for (int i = 0; i < 64; ++i) {
    std::vector<BigRat> c(13);
    for (auto& x : c)
      x = coef(rng);
    c.back() = 1;
    polys.push_back(ModPoly::reduce(UniPoly(c), p));
  }
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(factor_mod_p(polys[i++ % polys.size()], 7));
}
BENCHMARK(BM_factor_mod_p)->Arg(2)->Arg(43)->Arg(1'000'003)->Unit(benchmark::kMicrosecond);

void BM_closure_s6(benchmark::State& state)
{
  std::vector<Perm> gens{Perm::parse(6, "(1,2)"), Perm::parse(6, "(1,2,3,4,5,6)")};
  for (auto _ : state)
    benchmark::DoNotOptimize(closure(6, gens));
}
BENCHMARK(BM_closure_s6)->Unit(benchmark::kMicrosecond);

void BM_transposition_scan(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_transposition_generation(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_transposition_scan)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_discriminant_in_t(benchmark::State& state)
{
  PolyInT F = family_in_t(WParam(-2, 3));
  for (auto _ : state)
    benchmark::DoNotOptimize(discriminant_in_t(F));
}
BENCHMARK(BM_discriminant_in_t)->Unit(benchmark::kMicrosecond);

void BM_certify_corollary(benchmark::State& state)
{
  WParam w(-2, 3);
  BigRat s = corollary_s(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_specialization(w, s));
}
BENCHMARK(BM_certify_corollary)->Arg(1)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_curve_search(benchmark::State& state)
{
  UniPoly q = condition_quartic();
  for (auto _ : state)
    benchmark::DoNotOptimize(curve_search(43, q, static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_curve_search)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
