// Copyright 2026 The xPIPG Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "xpipg/xpipg.hpp"

namespace xpipg {
namespace {

ConicQP instance(int masses, double gamma = 0.1, std::uint64_t seed = 0) {
  OscMassParams p;
  p.masses = masses;
  p.horizon = 20;
  p.initial_state = sample_initial_state(masses, gamma, 0.05, seed);
  return oscillating_masses(p);
}

StepSizes steps_for(const ConicQP& qp) {
  return step_sizes(kNormInflation * spectral_norm_sym(qp.P).value,
                    kNormInflation * spectral_norm_rect(qp.H).value);
}

void BM_Iterate(benchmark::State& state) {
  const ConicQP qp = instance(static_cast<int>(state.range(0)));
  const StepSizes steps = steps_for(qp);
  SolverState s = initial_state(qp);
  IterateWorkspace ws;
  for (auto _ : state) {
    iterate(s, qp, steps, 1.6, ws);
    benchmark::DoNotOptimize(s.z.data());
  }
  state.counters["nnz_H"] = static_cast<double>(qp.H.nnz());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Iterate)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Residuals(benchmark::State& state) {
  const ConicQP qp = instance(static_cast<int>(state.range(0)));
  const StepSizes steps = steps_for(qp);
  SolverState s = initial_state(qp);
  for (int k = 0; k < 100; ++k) s = iterate(s, qp, steps, 1.6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(feasibility_residuals(qp, s.z, s.w));
    benchmark::DoNotOptimize(infeasibility_value(qp, s.w, s.w_prev));
  }
}
BENCHMARK(BM_Residuals)->Arg(4)->Arg(32);

void BM_SpectralNorm(benchmark::State& state) {
  const ConicQP qp = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_norm_rect(qp.H).value);
}
BENCHMARK(BM_SpectralNorm)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SolveFeasible(benchmark::State& state) {
  const ConicQP qp = instance(4);
  SolverConfig cfg;
  cfg.rho = static_cast<double>(state.range(0)) / 10.0;
  std::int64_t iterations = 0;
  for (auto _ : state) {
    const SolveResult r = solve(qp, cfg);
    iterations = r.stats.iterations;
  }
  state.counters["solver_iterations"] = static_cast<double>(iterations);
}
BENCHMARK(BM_SolveFeasible)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ProjectCone(benchmark::State& state) {
  const Index dim = state.range(0);
  ConeSpec cone;
  for (Index k = 0; k < 64; ++k) cone.blocks.push_back({ConeKind::kSecondOrder, dim});
  CounterRng rng(1);
  Vector y(64 * dim);
  for (Index i = 0; i < y.size(); ++i) y[i] = rng.normal();
  for (auto _ : state) {
    Vector v = y;
    project_cone_in_place(v, cone);
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(BM_ProjectCone)->Arg(3)->Arg(16);

}  // namespace
}  // namespace xpipg

BENCHMARK_MAIN();
