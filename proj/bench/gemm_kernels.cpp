// Packed complex GEMM: OpenMP kernel vs serial reference vs naive float.
// Arguments are the inner dimension; both operands have 64 rows.

#include <benchmark/benchmark.h>

#include <random>

#include "bcnn/bitpack.hpp"

namespace {

using namespace bcnn;

constexpr std::size_t kRows = 64;

struct Operands {
  std::vector<float> xr, xi, wr, wi;
  PackedComplexMatrix x, w;
};

Operands make(std::size_t inner) {
  std::mt19937_64 rng(7);
  auto signs = [&](std::size_t n) {
    std::vector<float> v(n);
    for (float& f : v) f = (rng() & 1) ? 1.0f : -1.0f;
    return v;
  };
  Operands o;
  o.xr = signs(kRows * inner);
  o.xi = signs(kRows * inner);
  o.wr = signs(kRows * inner);
  o.wi = signs(kRows * inner);
  o.x = pack_complex_matrix(o.xr, o.xi, kRows, inner);
  o.w = pack_complex_matrix(o.wr, o.wi, kRows, inner);
  return o;
}

void set_counters(benchmark::State& st, std::size_t inner) {
  st.counters["CMAC/s"] =
      benchmark::Counter(double(kRows * kRows * inner), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_packed_omp(benchmark::State& st) {
  const auto inner = std::size_t(st.range(0));
  const Operands o = make(inner);
  for (auto _ : st) benchmark::DoNotOptimize(binary_complex_gemm(o.x, o.w));
  set_counters(st, inner);
}

void BM_packed_serial(benchmark::State& st) {
  const auto inner = std::size_t(st.range(0));
  const Operands o = make(inner);
  for (auto _ : st) benchmark::DoNotOptimize(reference::binary_complex_gemm_serial(o.x, o.w));
  set_counters(st, inner);
}

void BM_naive_float(benchmark::State& st) {
  const auto inner = std::size_t(st.range(0));
  const Operands o = make(inner);
  for (auto _ : st)
    benchmark::DoNotOptimize(reference::complex_gemm_naive(o.xr, o.xi, o.wr, o.wi, kRows, inner, kRows));
  set_counters(st, inner);
}

}  // namespace

BENCHMARK(BM_packed_omp)->Arg(512)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_packed_serial)->Arg(512)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_naive_float)->Arg(512)->Arg(1024)->Arg(4096)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
