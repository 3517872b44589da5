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

// The `xpipg` command line: solve, bench and emit.

#ifndef XPIPG_CLI_COMMANDS_HPP
#define XPIPG_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "xpipg/xpipg.hpp"

namespace xpipg::cli {

inline constexpr int kExitOptimal = 0;
inline constexpr int kExitPrimalInfeasible = 2;
inline constexpr int kExitDualInfeasible = 3;
inline constexpr int kExitMaxIterations = 4;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitNumericalFailure = 70;

int exit_code(SolveStatus status);

inline constexpr const char* kTraceHeader =
    "iter,dz,dw,r_eq22_a,r_eq22_b,r_eq22_c,v_eq23";
inline constexpr const char* kRunRecordHeader =
    "instance,seed,gamma,rho,omega,status,iterations,primal_displacement,"
    "dual_displacement,residual_equality,residual_upper,residual_lower,"
    "wall_time";

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows);

// z then w, one value per line.
void write_solution(std::ostream& out, const SolveResult& result);

// key=value lines.
void write_summary(std::ostream& out, const SolveResult& result);

struct BenchOptions {
  int masses = 4;
  int horizon = 20;
  std::vector<double> gammas = {0.1};
  double sigma = 0.05;
  int seeds = 20;
  std::uint64_t first_seed = 0;
  std::vector<double> rhos = {1.6};
  int jobs = 1;
  SolverConfig config;  // rho is overwritten per cell
};

struct RunRecord {
  std::string instance;
  std::uint64_t seed = 0;
  double gamma = 0.0;
  double rho = 0.0;
  double omega = 0.0;
  SolveStatus status = SolveStatus::kMaxIterations;
  std::int64_t iterations = 0;
  double primal_displacement = 0.0;
  double dual_displacement = 0.0;
  FeasibilityResiduals residuals;
  double wall_time = 0.0;
};

// Instance for one (gamma, seed) pair. The initial state is drawn from `seed`
// alone, so every rho cell sees the same instances.
ConicQP bench_instance(int masses, int horizon, double gamma, double sigma,
                       std::uint64_t seed);

// Rows ordered by gamma, then rho, then seed, regardless of `jobs`.
std::vector<RunRecord> run_bench(const BenchOptions& options);

void write_run_csv(std::ostream& out, const std::vector<RunRecord>& records);

// One line per (gamma, rho) cell with the median iteration count and the
// status tally.
void write_bench_summary(std::ostream& out,
                         const std::vector<RunRecord>& records);

// Entry point shared by the binary and the tests. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace xpipg::cli

#endif  // XPIPG_CLI_COMMANDS_HPP
