// Copyright 2026 The Scramble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>

#include "scramble/eigen.hpp"
#include "scramble/entropy.hpp"
#include "scramble/floquet.hpp"
#include "scramble/scrambling.hpp"
#include "scramble/tfim.hpp"

namespace {

using namespace scramble;

ModelParams chain(int n, double hx) {
  ModelParams p;
  p.num_sites = n;
  p.tau = Period::half_epsilon_multiple(1);
  p.h_x = hx;
  return p;
}

void BM_FloquetKick(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FloquetPropagator prop(chain(n, 1.0));
  auto s = prepare_encoded_state(InitialStateKind::Neel, n);
  for (auto _ : state) {
    prop.apply_in_place(s.mutable_amplitudes());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_FloquetKick)->DenseRange(5, 11, 2);

StateVector scrambled(int n) {
  auto s = prepare_encoded_state(InitialStateKind::Neel, n);
  const FloquetPropagator prop(chain(n, 1.0));
  for (int k = 0; k < 50; ++k) prop.apply_in_place(s.mutable_amplitudes());
  return s;
}

void BM_SchmidtSpectrum(benchmark::State& state) {
  const auto s = scrambled(11);
  const auto keep = SubsetMask::range(0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(schmidt_spectrum(s, keep));
}
BENCHMARK(BM_SchmidtSpectrum)->DenseRange(1, 6);

void BM_PartialTraceEntropy(benchmark::State& state) {
  const auto s = scrambled(11);
  const auto keep = SubsetMask::range(0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subsystem_entropy(s, keep, EntropyMethod::PartialTrace));
}
BENCHMARK(BM_PartialTraceEntropy)->DenseRange(1, 6);

void BM_EntropySet(benchmark::State& state) {
  const auto s = scrambled(11);
  const TmiEvaluator eval(Partition(11, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eval.entropies(s));
}
BENCHMARK(BM_EntropySet)->Arg(1)->Arg(5)->Arg(9);

void BM_HermitianEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rho = partial_trace(scrambled(11), SubsetMask::range(0, static_cast<int>(std::log2(n)))).entries;
  const auto method = state.range(1) ? EigenMethod::Jacobi : EigenMethod::Tridiagonal;
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(rho, method));
}
BENCHMARK(BM_HermitianEigenvalues)->ArgsProduct({{16, 32, 64}, {0, 1}});

void BM_TfimHamiltonian(benchmark::State& state) {
  ModelParams p = chain(static_cast<int>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_tfim_hamiltonian(p));
}
BENCHMARK(BM_TfimHamiltonian)->DenseRange(6, 10, 2);

void BM_TfimStep(benchmark::State& state) {
  ModelParams p = chain(static_cast<int>(state.range(0)), 1.0);
  const auto prop = shared_tfim_propagator(p);
  const auto psi = prepare_encoded_state(InitialStateKind::Neel, p.num_sites);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.1;
    benchmark::DoNotOptimize(prop->propagate(psi, t));
  }
}
BENCHMARK(BM_TfimStep)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
