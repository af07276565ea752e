#include <benchmark/benchmark.h>

#include "pqaka/crypto/kem.hpp"

using namespace pqaka;

namespace {

crypto::KemHandle suite_or_skip(benchmark::State& state, const char* name) {
  if (!crypto::kem_available(name)) {
    state.SkipWithError("suite not compiled in");
    return nullptr;
  }
  return crypto::find_kem(name);
}

void BM_KeyGen(benchmark::State& state, const char* name) {
  auto kem = suite_or_skip(state, name);
  if (!kem) return;
  OsRandom rng;
  for (auto _ : state) benchmark::DoNotOptimize(kem->keygen(rng));
}

void BM_Encaps(benchmark::State& state, const char* name) {
  auto kem = suite_or_skip(state, name);
  if (!kem) return;
  OsRandom rng;
  const auto kp = kem->keygen(rng);
  for (auto _ : state) benchmark::DoNotOptimize(kem->encaps(kp.pk, rng));
}

void BM_Decaps(benchmark::State& state, const char* name) {
  auto kem = suite_or_skip(state, name);
  if (!kem) return;
  OsRandom rng;
  const auto kp = kem->keygen(rng);
  const auto enc = kem->encaps(kp.pk, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kem->decaps(kp.sk, enc.ct));
}

}  // namespace

#define PQAKA_KEM_BENCH(name)                                       \
  BENCHMARK_CAPTURE(BM_KeyGen, name, #name)->Unit(benchmark::kMicrosecond); \
  BENCHMARK_CAPTURE(BM_Encaps, name, #name)->Unit(benchmark::kMicrosecond); \
  BENCHMARK_CAPTURE(BM_Decaps, name, #name)->Unit(benchmark::kMicrosecond)

PQAKA_KEM_BENCH(test);
PQAKA_KEM_BENCH(kyber);
PQAKA_KEM_BENCH(hqc);
PQAKA_KEM_BENCH(bike);
PQAKA_KEM_BENCH(mceliece);
