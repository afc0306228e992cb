#include <random>
#include <thread>
#include <vector>

#include <benchmark/benchmark.h>

#include "qnf/clifford.hpp"
#include "qnf/harness.hpp"
#include "qnf/normal_form.hpp"
#include "qnf/synthesis.hpp"

namespace {

// One conjecture trial: build a random normal form and check its lde.
std::optional<std::string> lde_trial(unsigned p, std::size_t index) {
  const std::size_t h = index % 7;
  const auto nf = qnf::random_nf(p, h, 1000 + index);
  if (qnf::lde_matrix(qnf::nf_to_matrix(nf)) != qnf::conjectured_lde(h, p)) return "lde mismatch";
  return std::nullopt;
}

void BM_TrialsSerial(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto out = qnf::run_trials_serial(64, [p](std::size_t i) { return lde_trial(p, i); });
    benchmark::DoNotOptimize(out.passed);
  }
}
BENCHMARK(BM_TrialsSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_TrialsParallel(benchmark::State& state) {
  const auto p = static_cast<unsigned>(state.range(0));
  const unsigned workers = std::max(2U, std::thread::hardware_concurrency());
  for (auto _ : state) {
    auto out = qnf::run_trials_parallel(64, workers, [p](std::size_t i) { return lde_trial(p, i); });
    benchmark::DoNotOptimize(out.passed);
  }
  state.counters["workers"] = workers;
}
BENCHMARK(BM_TrialsParallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();

std::vector<qnf::CliffordElem> operands(unsigned p) {
  std::mt19937_64 rng(7);
  std::vector<qnf::CliffordElem> v;
  for (int i = 0; i < 64; ++i) v.push_back(qnf::random_clifford(p, rng));
  return v;
}

void BM_CliffordMul(benchmark::State& state) {
  const auto v = operands(static_cast<unsigned>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qnf::clifford_mul(v[i % 64], v[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_CliffordMul)->Arg(5)->Arg(13);

void BM_CliffordMulReference(benchmark::State& state) {
  const auto v = operands(static_cast<unsigned>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qnf::clifford_mul_reference(v[i % 64], v[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_CliffordMulReference)->Arg(5)->Arg(13);

}  // namespace

BENCHMARK_MAIN();
