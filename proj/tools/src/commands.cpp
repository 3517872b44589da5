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

#include "xpipg_cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "CLI11.hpp"

namespace xpipg::cli {

namespace {

std::string short_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

// Thrown for failures that map to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path + " for writing");
  return file;
}

// Writes to `path`, or to `fallback` when path is "-".
template <typename Fn>
void write_to(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file = open_output(path);
  fn(file);
  if (!file) throw UsageError("failed writing " + path);
}

void add_solver_options(CLI::App& cmd, SolverConfig& cfg,
                        std::optional<double>& alpha,
                        std::optional<double>& beta) {
  cmd.add_option("--rho", cfg.rho, "Extrapolation factor in (0, 2)")
      ->capture_default_str();
  cmd.add_option("--omega", cfg.omega, "Dual to primal step ratio")
      ->capture_default_str();
  cmd.add_option("--safety", cfg.safety, "Step-size safety factor in (0, 1)")
      ->capture_default_str();
  cmd.add_option("--eps-abs", cfg.eps_abs, "Displacement tolerance")
      ->capture_default_str();
  cmd.add_option("--eps-fea", cfg.eps_fea, "KKT residual tolerance")
      ->capture_default_str();
  cmd.add_option("--eps-inf", cfg.eps_inf, "Infeasibility test slack")
      ->capture_default_str();
  cmd.add_option("--cert-tol", cfg.certificate_tol,
                 "Certificate identity tolerance")
      ->capture_default_str();
  cmd.add_option("--max-iters", cfg.max_iterations, "Iteration limit")
      ->capture_default_str();
  cmd.add_option("--check-interval", cfg.check_interval,
                 "Iterations between termination checks")
      ->capture_default_str();
  cmd.add_option("--alpha", alpha, "Primal step size override");
  cmd.add_option("--beta", beta, "Dual step size override (needs --alpha)");
}

int cmd_solve(const std::string& path, SolverConfig cfg,
              const std::string& trace_path, const std::string& solution_path,
              std::ostream& out) {
  ConicQP qp;
  try {
    qp = read_problem_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (const auto report = validate(qp); !report.empty()) {
    std::string msg = path + ": invalid problem:";
    for (const std::string& line : report) msg += "\n  " + line;
    throw UsageError(msg);
  }
  cfg.record_trace = !trace_path.empty();
  const SolveResult result = solve(qp, cfg);
  write_summary(out, result);
  if (!trace_path.empty()) {
    write_to(trace_path, out,
             [&](std::ostream& os) { write_trace_csv(os, result.trace); });
  }
  if (!solution_path.empty()) {
    write_to(solution_path, out,
             [&](std::ostream& os) { write_solution(os, result); });
  }
  return exit_code(result.status);
}

}  // namespace

int exit_code(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return kExitOptimal;
    case SolveStatus::kPrimalInfeasible:
      return kExitPrimalInfeasible;
    case SolveStatus::kDualInfeasible:
      return kExitDualInfeasible;
    case SolveStatus::kMaxIterations:
      return kExitMaxIterations;
    case SolveStatus::kNumericalFailure:
      return kExitNumericalFailure;
  }
  return kExitNumericalFailure;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& rows) {
  out << kTraceHeader << '\n';
  for (const TraceRow& r : rows) {
    out << r.iteration << ',' << format_real(r.primal_displacement) << ','
        << format_real(r.dual_displacement) << ','
        << format_real(r.residuals.equality) << ','
        << format_real(r.residuals.upper) << ','
        << format_real(r.residuals.lower) << ','
        << format_real(r.infeasibility_value) << '\n';
  }
}

void write_solution(std::ostream& out, const SolveResult& result) {
  for (Index i = 0; i < result.z.size(); ++i) out << format_real(result.z[i]) << '\n';
  for (Index i = 0; i < result.w.size(); ++i) out << format_real(result.w[i]) << '\n';
}

void write_summary(std::ostream& out, const SolveResult& result) {
  const SolveStats& s = result.stats;
  out << "status=" << to_string(result.status) << '\n'
      << "iterations=" << s.iterations << '\n'
      << "primal_displacement=" << format_real(s.primal_displacement) << '\n'
      << "dual_displacement=" << format_real(s.dual_displacement) << '\n'
      << "residual_equality=" << format_real(s.residuals.equality) << '\n'
      << "residual_upper=" << format_real(s.residuals.upper) << '\n'
      << "residual_lower=" << format_real(s.residuals.lower) << '\n'
      << "infeasibility_value=" << format_real(s.infeasibility_value) << '\n'
      << "alpha=" << format_real(s.steps.alpha) << '\n'
      << "beta=" << format_real(s.steps.beta) << '\n';
  const double cert_norm =
      result.certificate ? result.certificate->direction.norm() : 0.0;
  out << "certificate_norm=" << format_real(cert_norm) << '\n';
  if (result.certificate) {
    for (const IdentityCheck& c : result.certificate->diagnostics.checks) {
      out << "certificate_" << c.name << '=' << format_real(c.residual)
          << '\n';
    }
  }
  out << "elapsed_seconds=" << format_real(s.elapsed_seconds) << '\n';
  if (!result.warning.empty()) out << "warning=" << result.warning << '\n';
}

ConicQP bench_instance(int masses, int horizon, double gamma, double sigma,
                       std::uint64_t seed) {
  OscMassParams p;
  p.masses = masses;
  p.horizon = horizon;
  p.initial_state = sample_initial_state(masses, gamma, sigma, seed);
  return oscillating_masses(p);
}

std::vector<RunRecord> run_bench(const BenchOptions& o) {
  if (o.masses < 1 || o.horizon < 2 || o.seeds < 1 || o.jobs < 1 ||
      o.gammas.empty() || o.rhos.empty() || !(o.sigma >= 0.0)) {
    throw std::invalid_argument("bench: invalid options");
  }
  for (double rho : o.rhos) {
    SolverConfig c = o.config;
    c.rho = rho;
    validate_config(c);
  }

  struct Job {
    double gamma;
    double rho;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (double gamma : o.gammas) {
    for (double rho : o.rhos) {
      for (int k = 0; k < o.seeds; ++k) {
        jobs.push_back({gamma, rho, o.first_seed + static_cast<std::uint64_t>(k)});
      }
    }
  }

  std::vector<RunRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      const ConicQP qp =
          bench_instance(o.masses, o.horizon, job.gamma, o.sigma, job.seed);
      SolverConfig cfg = o.config;
      cfg.rho = job.rho;
      cfg.record_trace = false;
      const SolveResult r = solve(qp, cfg);
      RunRecord& rec = records[i];
      rec.instance = "osc-l" + std::to_string(o.masses) + "-tau" +
                     std::to_string(o.horizon) + "-g" + short_real(job.gamma) +
                     "-s" + std::to_string(job.seed);
      rec.seed = job.seed;
      rec.gamma = job.gamma;
      rec.rho = job.rho;
      rec.omega = cfg.omega;
      rec.status = r.status;
      rec.iterations = r.stats.iterations;
      rec.primal_displacement = r.stats.primal_displacement;
      rec.dual_displacement = r.stats.dual_displacement;
      rec.residuals = r.stats.residuals;
      rec.wall_time = r.stats.elapsed_seconds;
    }
  };
  const int threads =
      std::min<int>(o.jobs, static_cast<int>(jobs.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return records;
}

void write_run_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kRunRecordHeader << '\n';
  for (const RunRecord& r : records) {
    out << r.instance << ',' << r.seed << ',' << short_real(r.gamma) << ','
        << short_real(r.rho) << ',' << short_real(r.omega) << ','
        << to_string(r.status) << ',' << r.iterations << ','
        << format_real(r.primal_displacement) << ','
        << format_real(r.dual_displacement) << ','
        << format_real(r.residuals.equality) << ','
        << format_real(r.residuals.upper) << ','
        << format_real(r.residuals.lower) << ',' << format_real(r.wall_time)
        << '\n';
  }
}

void write_bench_summary(std::ostream& out,
                         const std::vector<RunRecord>& records) {
  // Records arrive grouped by cell; keep that order.
  std::size_t begin = 0;
  while (begin < records.size()) {
    std::size_t end = begin;
    while (end < records.size() && records[end].gamma == records[begin].gamma &&
           records[end].rho == records[begin].rho) {
      ++end;
    }
    std::vector<std::int64_t> iters;
    std::map<std::string, int> tally;
    for (std::size_t i = begin; i < end; ++i) {
      iters.push_back(records[i].iterations);
      ++tally[std::string(to_string(records[i].status))];
    }
    std::sort(iters.begin(), iters.end());
    const std::size_t n = iters.size();
    const double median =
        n % 2 == 1 ? static_cast<double>(iters[n / 2])
                   : 0.5 * static_cast<double>(iters[n / 2 - 1] + iters[n / 2]);
    out << "cell gamma=" << short_real(records[begin].gamma)
        << " rho=" << short_real(records[begin].rho) << " runs=" << n
        << " median_iterations=" << short_real(median);
    for (const auto& [status, count] : tally) out << ' ' << status << '=' << count;
    out << '\n';
    begin = end;
  }
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"First-order solver for conic quadratic programs", "xpipg"};
  app.require_subcommand(1);

  SolverConfig solve_cfg;
  std::optional<double> solve_alpha;
  std::optional<double> solve_beta;
  std::string problem_path;
  std::string trace_path;
  std::string solution_path;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a conicqp v1 file");
  solve_cmd->add_option("file", problem_path, "Problem file")->required();
  add_solver_options(*solve_cmd, solve_cfg, solve_alpha, solve_beta);
  solve_cmd->add_option("--trace", trace_path, "Write the convergence trace CSV");
  solve_cmd->add_option("--solution", solution_path, "Write z then w, one value per line");

  BenchOptions bench;
  std::optional<double> bench_alpha;
  std::optional<double> bench_beta;
  std::string bench_out = "-";
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Solve seeded oscillating-masses instances");
  bench_cmd->add_option("--l", bench.masses, "Number of masses")->capture_default_str();
  bench_cmd->add_option("--tau", bench.horizon, "Horizon length")->capture_default_str();
  bench_cmd->add_option("--gamma", bench.gammas, "Initial displacement means")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--sigma", bench.sigma, "Initial state spread")->capture_default_str();
  bench_cmd->add_option("--seeds", bench.seeds, "Instances per cell")->capture_default_str();
  bench_cmd->add_option("--first-seed", bench.first_seed, "Seed of the first instance")
      ->capture_default_str();
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")->capture_default_str();
  bench_cmd->add_option("--out", bench_out, "Run record CSV path, - for stdout")
      ->capture_default_str();
  add_solver_options(*bench_cmd, bench.config, bench_alpha, bench_beta);
  // --rho takes a list here.
  bench_cmd->remove_option(bench_cmd->get_option("--rho"));
  bench_cmd->add_option("--rho", bench.rhos, "Extrapolation factors")
      ->delimiter(',')
      ->capture_default_str();

  int emit_masses = 4;
  int emit_horizon = 20;
  double emit_gamma = 0.1;
  double emit_sigma = 0.05;
  double emit_dt = 0.1;
  std::uint64_t emit_seed = 0;
  std::string emit_out = "-";
  CLI::App* emit_cmd =
      app.add_subcommand("emit", "Write an oscillating-masses instance");
  emit_cmd->add_option("--l", emit_masses, "Number of masses")->capture_default_str();
  emit_cmd->add_option("--tau", emit_horizon, "Horizon length")->capture_default_str();
  emit_cmd->add_option("--gamma", emit_gamma, "Initial displacement mean")
      ->capture_default_str();
  emit_cmd->add_option("--sigma", emit_sigma, "Initial state spread")->capture_default_str();
  emit_cmd->add_option("--dt", emit_dt, "Sampling period")->capture_default_str();
  emit_cmd->add_option("--seed", emit_seed, "Instance seed")->capture_default_str();
  emit_cmd->add_option("--out", emit_out, "Output path, - for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      solve_cfg.alpha = solve_alpha;
      solve_cfg.beta = solve_beta;
      validate_config(solve_cfg);
      return cmd_solve(problem_path, solve_cfg, trace_path, solution_path, out);
    }
    if (*bench_cmd) {
      bench.config.alpha = bench_alpha;
      bench.config.beta = bench_beta;
      const std::vector<RunRecord> records = run_bench(bench);
      write_to(bench_out, out,
               [&](std::ostream& os) { write_run_csv(os, records); });
      write_bench_summary(bench_out == "-" ? err : out, records);
      return 0;
    }
    OscMassParams p;
    p.masses = emit_masses;
    p.horizon = emit_horizon;
    p.sampling_period = emit_dt;
    p.initial_state = sample_initial_state(std::max(emit_masses, 1), emit_gamma,
                                           emit_sigma, emit_seed);
    const ConicQP qp = oscillating_masses(p);
    write_to(emit_out, out, [&](std::ostream& os) { write_problem(os, qp); });
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace xpipg::cli
