#include <benchmark/benchmark.h>

#include "extremal_disc/classify.hpp"

using namespace xdisc;

namespace {

void BM_SampleTetrablock(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_e(n, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleTetrablock)->Arg(1000)->Arg(100000);

void BM_SampleRII(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample_rii(10000, 1));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_SampleRII);

void BM_PhiTilde(benchmark::State& state) {
  const auto pts = sample_e(4096, 2);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(phi_tilde(1.0, pts[i++ & 4095]));
}
BENCHMARK(BM_PhiTilde);

void BM_TetraFh(benchmark::State& state) {
  const auto pts = sample_e(4096, 3);
  const RIIMapSpec h = RIIMapSpec::canonical(0.5);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tetra_f_h(0.5, h, pts[i++ & 4095]));
}
BENCHMARK(BM_TetraFh);

void BM_AdmissibleOmega(benchmark::State& state) {
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(admissible_omega_set(cis(0.7), 0.6, grid));
}
BENCHMARK(BM_AdmissibleOmega)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_ClassifyG2Auto(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_g2(AutoForm{{cis(0.7), 0.6}}));
}
BENCHMARK(BM_ClassifyG2Auto)->Unit(benchmark::kMillisecond);

void BM_ClassifyFormVA(benchmark::State& state) {
  FormVA f;
  f.beta = 0.5;
  f.z = ZSpec::times_lambda(SelfMapSpec::constant(0.0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_e(f));
}
BENCHMARK(BM_ClassifyFormVA)->Unit(benchmark::kMillisecond);

void BM_VerifyIntoDisc(benchmark::State& state) {
  const auto f = LeftInverseSpec::of(PhiTilde{cis(0.3)});
  const auto tag = DomainTag::of(DomainKind::Tetrablock);
  for (auto _ : state) benchmark::DoNotOptimize(verify_into_disc(f, tag, 100000, 4));
}
BENCHMARK(BM_VerifyIntoDisc)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
