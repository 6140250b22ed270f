#include <benchmark/benchmark.h>

#include "wzsum/catalog.hpp"
#include "wzsum/certificate_file.hpp"
#include "wzsum/harmonic.hpp"
#include "wzsum/wz.hpp"

namespace {

using namespace wzsum;

const std::filesystem::path kFixtures = WZSUM_FIXTURES_DIR;

void BM_RationalSum(benchmark::State& state) {
  for (auto _ : state) {
    Rational total(0);
    for (long i = 1; i <= state.range(0); ++i) total += Rational(1, i);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_RationalSum)->Arg(100)->Arg(1000);

void BM_Harmonic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(harmonic(state.range(0), 2));
}
BENCHMARK(BM_Harmonic)->Arg(200);

void BM_CertificateResidual(benchmark::State& state) {
  static const char* names[] = {"thm1", "thm2", "thm3"};
  const WZPair pair = load_certificate(kFixtures / (std::string(names[state.range(0)]) + ".wz"));
  for (auto _ : state) benchmark::DoNotOptimize(certificate_residual(pair));
  state.SetLabel(pair.name);
}
BENCHMARK(BM_CertificateResidual)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_MutatedResidual(benchmark::State& state) {
  const WZPair pair = mutated_pair(load_certificate(kFixtures / "thm2.wz"), "flip-exp:0");
  for (auto _ : state) benchmark::DoNotOptimize(certificate_residual(pair));
}
BENCHMARK(BM_MutatedResidual)->Unit(benchmark::kMillisecond);

void BM_CheckIdentity(benchmark::State& state) {
  const auto& entry = find_entry(state.range(0) == 0 ? "ID03" : "ID24");
  const CheckConfig config{state.range(1), 5, 0};
  for (auto _ : state) benchmark::DoNotOptimize(check_identity(entry, config));
  state.SetLabel(entry.id);
}
BENCHMARK(BM_CheckIdentity)->Args({0, 20})->Args({1, 100})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
