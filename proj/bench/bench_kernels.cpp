// Serial reference against the OpenMP kernels. Arg 0 is serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "ybe/group_catalog.hpp"
#include "ybe/harness.hpp"
#include "ybe/perm_brace.hpp"

using namespace ybe;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void BM_ValidateYbe(benchmark::State& st) {
  const auto s = associated_solution(trivial_brace(catalog_group("A5")));
  for (auto _ : st) benchmark::DoNotOptimize(validate_ybe(s, mode(st)).ok());
}

void BM_ValidateBrace(benchmark::State& st) {
  const auto b = trivial_brace(catalog_group("A5"));
  for (auto _ : st) benchmark::DoNotOptimize(validate_brace(b, mode(st)).ok);
}

void BM_EnumerateSolutions(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_solutions(4, EnumerationMode::involutive, mode(st)).size());
}

void BM_EnumerateBraces(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_braces(6, mode(st)).size());
}

void BM_Congruences(benchmark::State& st) {
  const auto s = twist(9);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_congruences(s, mode(st)).size());
}

void BM_PermBrace(benchmark::State& st) {
  const auto s = associated_solution(trivial_brace(catalog_group("A5")));
  for (auto _ : st) benchmark::DoNotOptimize(PermBrace::build(s, {.exec = mode(st)}).order());
}

void BM_Harness(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(run_harness("i-simple-equivalence", {.exec = mode(st)}).checked);
}

}  // namespace

BENCHMARK(BM_ValidateYbe)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateBrace)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSolutions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateBraces)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Congruences)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermBrace)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Harness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
