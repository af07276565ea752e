#include <benchmark/benchmark.h>

#include "pqaka/sim.hpp"

using namespace pqaka;

namespace {

void BM_Session(benchmark::State& state, const char* kem, sim::SessionMode mode) {
  if (!crypto::kem_available(kem)) {
    state.SkipWithError("suite not compiled in");
    return;
  }
  sim::World w(crypto::find_kem(kem), 0);
  w.add_serving_network();
  w.add_subscriber("imsi-001010000000001");
  sim::run_session(w, 0, 0);
  for (auto _ : state) {
    auto r = sim::run_session(w, 0, 0, sim::in_mode(mode));
    if (!r.outcome.keys_agree()) state.SkipWithError("session failed");
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Session, test_supi, "test", sim::SessionMode::kSupi)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Session, test_guti, "test", sim::SessionMode::kGuti)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Session, kyber_supi, "kyber", sim::SessionMode::kSupi)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Session, kyber_guti, "kyber", sim::SessionMode::kGuti)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
