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

#include "xpipg/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "xpipg/projections.hpp"

namespace xpipg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double inf_norm(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// |slack * r| with the convention that an infinite slack contributes |r|.
double complementarity(double slack, double r) {
  if (r == 0.0) return 0.0;
  if (std::isinf(slack)) return std::abs(r);
  return std::abs(slack * r);
}

}  // namespace

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kPrimalInfeasible:
      return "primal_infeasible";
    case SolveStatus::kDualInfeasible:
      return "dual_infeasible";
    case SolveStatus::kMaxIterations:
      return "max_iterations";
    case SolveStatus::kNumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

void validate_config(const SolverConfig& c) {
  const auto fail = [](const char* what) {
    throw std::invalid_argument(std::string("solver config: ") + what);
  };
  if (!(c.rho > 0.0 && c.rho < 2.0)) fail("rho must lie in (0, 2)");
  if (!(c.omega > 0.0)) fail("omega must be positive");
  if (!(c.safety > 0.0 && c.safety < 1.0)) fail("safety must lie in (0, 1)");
  if (!(c.eps_abs > 0.0)) fail("eps_abs must be positive");
  if (!(c.eps_fea > 0.0)) fail("eps_fea must be positive");
  if (!(c.eps_inf > 0.0)) fail("eps_inf must be positive");
  if (!(c.certificate_tol > 0.0)) fail("certificate_tol must be positive");
  if (c.max_iterations < 1) fail("max_iterations must be at least 1");
  if (c.check_interval < 1) fail("check_interval must be at least 1");
  if (c.dual_confirmations < 1) fail("dual_confirmations must be at least 1");
  if (c.alpha && !(*c.alpha > 0.0)) fail("alpha must be positive");
  if (c.beta && !(*c.beta > 0.0)) fail("beta must be positive");
  if (c.beta && !c.alpha) fail("beta override requires alpha");
}

SolverState initial_state(const ConicQP& qp, const std::optional<Vector>& xi,
                          const std::optional<Vector>& eta) {
  const Index n = qp.num_variables();
  const Index m = qp.num_constraints();
  SolverState s;
  s.xi = xi ? *xi : project_box(Vector::Zero(n), qp.box);
  s.eta = eta ? *eta : Vector::Zero(m);
  if (s.xi.size() != n || s.eta.size() != m) {
    throw std::invalid_argument("initial_state: starting point has wrong size");
  }
  s.z = s.xi;
  s.z_prev = s.xi;
  s.w = s.eta;
  s.w_prev = s.eta;
  return s;
}

bool iterate(SolverState& s, const ConicQP& qp, const StepSizes& steps,
             double rho, IterateWorkspace& ws) {
  qp.P.multiply(s.xi, ws.grad);
  qp.H.multiply_transposed(s.eta, ws.dual_grad);
  ws.grad += qp.q;
  ws.grad += ws.dual_grad;
  std::swap(s.z, s.z_prev);
  s.z = s.xi - steps.alpha * ws.grad;
  project_box_in_place(s.z, qp.box);

  ws.extrapolated = 2.0 * s.z - s.xi;
  qp.H.multiply(ws.extrapolated, ws.constraint);
  std::swap(s.w, s.w_prev);
  s.w = s.eta + steps.beta * (ws.constraint - qp.g);
  project_polar_in_place(s.w, qp.cone);

  s.xi = (1.0 - rho) * s.xi + rho * s.z;
  s.eta = (1.0 - rho) * s.eta + rho * s.w;
  ++s.iteration;
  return s.z.allFinite() && s.w.allFinite();
}

SolverState iterate(const SolverState& state, const ConicQP& qp,
                    const StepSizes& steps, double rho) {
  SolverState next = state;
  IterateWorkspace ws;
  iterate(next, qp, steps, rho, ws);
  return next;
}

DisplacementTest check_displacement(const SolverState& s,
                                    const StepSizes& steps, double rho,
                                    double eps_abs) {
  DisplacementTest t;
  t.primal = (s.z - s.z_prev).norm() / (steps.alpha * rho);
  t.dual = (s.w - s.w_prev).norm() / (steps.beta * rho);
  if (std::max(t.primal, t.dual) <= eps_abs) {
    t.optimal = true;
  } else {
    t.primal_infeasible = t.dual > eps_abs;
    t.dual_infeasible = t.primal > eps_abs;
  }
  return t;
}

double FeasibilityResiduals::max() const {
  return std::max({equality, upper, lower});
}

FeasibilityResiduals feasibility_residuals(const ConicQP& qp, const Vector& z,
                                           const Vector& w) {
  FeasibilityResiduals res;
  Vector y = qp.H * z - qp.g;
  if (qp.cone.all_zero()) {
    res.equality = inf_norm(y);
  } else {
    Vector shifted = y + w;
    project_cone_in_place(shifted, qp.cone);
    res.equality = inf_norm(y - shifted);
  }

  // r = -Pz - q - H^T w
  Vector r = -(qp.P * z) - qp.q - qp.H.transpose_times(w);
  for (Index i = 0; i < z.size(); ++i) {
    const double ri = r[i];
    if (ri > 0.0) {
      res.upper = std::max(res.upper, complementarity(qp.box.upper[i] - z[i], ri));
    } else if (ri < 0.0) {
      res.lower = std::max(res.lower, complementarity(qp.box.lower[i] - z[i], ri));
    }
  }
  return res;
}

bool check_feasible_termination(const ConicQP& qp, const Vector& z,
                                const Vector& w, double eps_fea) {
  return feasibility_residuals(qp, z, w).max() <= eps_fea;
}

double infeasibility_value(const ConicQP& qp, const Vector& w,
                           const Vector& w_prev) {
  return inf_linear_over_box(qp.H, qp.g, qp.box, w - w_prev);
}

namespace {

// Distance-like violation of v in the polar cone: the part of v inside K.
double polar_violation(const Vector& v, const ConeSpec& cone) {
  if (cone.all_zero()) return 0.0;
  return inf_norm(project_cone(v, cone));
}

double polar_tolerance(const Vector& v) {
  return 1e-9 * std::max(1.0, inf_norm(v));
}

}  // namespace

bool check_infeasible_termination(const ConicQP& qp, const Vector& w,
                                  const Vector& w_prev, double eps_inf) {
  const Vector v = w - w_prev;
  if (polar_violation(v, qp.cone) > polar_tolerance(v)) return false;
  return inf_linear_over_box(qp.H, qp.g, qp.box, v) + eps_inf > 0.0;
}

bool CertificateDiagnostics::identities_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed; });
}

CertificateDiagnostics certificate_check(const ConicQP& qp,
                                         const Certificate& cert, double rho,
                                         const StepSizes& steps, double tol) {
  CertificateDiagnostics d;
  const auto add = [&d](std::string name, double residual, double bound) {
    // NaN residuals fail.
    d.checks.push_back({std::move(name), residual, bound, residual <= bound});
  };
  const Vector& v = cert.direction;

  if (cert.kind == CertificateKind::kPrimalInfeasibility) {
    if (v.size() != qp.num_constraints()) {
      add("dimension", kInf, 0.0);
      return d;
    }
    const double violation = polar_violation(v, qp.cone);
    add("polar_membership", violation, tol * std::max(1.0, inf_norm(v)));
    // sup over K of <y, v> is 0 on the polar cone and +inf off it.
    const double support_k = violation > 0.0 ? kInf : 0.0;
    const double inf_d = inf_linear_over_box(qp.H, qp.g, qp.box, v);
    const double sq = v.squaredNorm();
    const double gap = inf_d - support_k;
    add("separation_identity", std::abs(gap - sq / (rho * steps.beta)),
        tol * std::max(1.0, sq));
    d.strict = gap > 0.0;
    return d;
  }

  if (v.size() != qp.num_variables()) {
    add("dimension", kInf, 0.0);
    return d;
  }
  // Every dual condition is homogeneous in v, so bounds scale with |v|.
  const double scale = inf_norm(v);
  Vector hv = qp.H * v;
  add("cone_membership", inf_norm(hv - project_cone(hv, qp.cone)), tol * scale);
  add("null_space", inf_norm(qp.P * v), tol * scale);
  const BoxProduct rec = recession_box(qp.box);
  add("recession", inf_norm(v - project_box(v, rec)), tol * scale);
  const double qv = qp.q.dot(v);
  const double sq = v.squaredNorm() / (rho * steps.alpha);
  add("improving_identity", std::abs(qv + sq),
      tol * std::max(std::abs(qv), sq));
  d.strict = qv < 0.0;
  return d;
}

SolveResult solve(const ConicQP& qp, const SolverConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  validate_config(config);
  if (const auto report = validate(qp); !report.empty()) {
    throw std::invalid_argument("solve: invalid problem: " + report.front());
  }

  SolveResult result;
  SolveStats& stats = result.stats;
  if (config.alpha) {
    stats.steps.alpha = *config.alpha;
    stats.steps.beta = config.beta ? *config.beta : config.omega * *config.alpha;
  } else {
    stats.norm_p = kNormInflation *
                   spectral_norm_sym(qp.P, config.power_tol,
                                     config.power_max_iterations,
                                     config.power_seed)
                       .value;
    stats.norm_h = kNormInflation *
                   spectral_norm_rect(qp.H, config.power_tol,
                                      config.power_max_iterations,
                                      config.power_seed)
                       .value;
    stats.steps =
        step_sizes(stats.norm_p, stats.norm_h, config.omega, config.safety);
  }
  const StepSizes steps = stats.steps;
  const double rho = config.rho;

  SolverState state =
      initial_state(qp, config.initial_xi, config.initial_eta);
  IterateWorkspace ws;
  int dual_streak = 0;

  const auto finish = [&](SolveStatus status, const Vector& z,
                          const Vector& w) {
    result.status = status;
    result.z = z;
    result.w = w;
    stats.iterations = state.iteration;
    stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    return std::move(result);
  };

  for (std::int64_t j = 1; j <= config.max_iterations; ++j) {
    if (!iterate(state, qp, steps, rho, ws)) {
      result.warning = "non-finite iterate at iteration " + std::to_string(j);
      return finish(SolveStatus::kNumericalFailure, state.z_prev, state.w_prev);
    }
    const bool last = j == config.max_iterations;
    if (j < 2 || (j % config.check_interval != 0 && !last)) continue;

    const DisplacementTest disp =
        check_displacement(state, steps, rho, config.eps_abs);
    stats.primal_displacement = disp.primal;
    stats.dual_displacement = disp.dual;
    stats.residuals = feasibility_residuals(qp, state.z, state.w);
    stats.infeasibility_value = infeasibility_value(qp, state.w, state.w_prev);
    if (config.record_trace) {
      result.trace.push_back({j, disp.primal, disp.dual, stats.residuals,
                              stats.infeasibility_value});
    }

    if (disp.optimal && stats.residuals.max() <= config.eps_fea) {
      return finish(SolveStatus::kOptimal, state.z, state.w);
    }

    if (disp.primal_infeasible &&
        check_infeasible_termination(qp, state.w, state.w_prev,
                                     config.eps_inf)) {
      Certificate cert{CertificateKind::kPrimalInfeasibility,
                       state.w - state.w_prev, {}};
      cert.diagnostics =
          certificate_check(qp, cert, rho, steps, config.certificate_tol);
      if (cert.diagnostics.certifies()) {
        result.certificate = std::move(cert);
        return finish(SolveStatus::kPrimalInfeasible, state.z, state.w);
      }
    }

    if (disp.dual_infeasible) {
      Certificate cert{CertificateKind::kDualInfeasibility,
                       state.z - state.z_prev, {}};
      cert.diagnostics =
          certificate_check(qp, cert, rho, steps, config.certificate_tol);
      dual_streak = cert.diagnostics.certifies() ? dual_streak + 1 : 0;
      if (dual_streak >= config.dual_confirmations) {
        result.certificate = std::move(cert);
        return finish(SolveStatus::kDualInfeasible, state.z, state.w);
      }
    } else {
      dual_streak = 0;
    }

    if (inf_norm(state.xi) > config.divergence_bound ||
        inf_norm(state.eta) > config.divergence_bound) {
      result.warning = "iterates diverged without a valid certificate";
      return finish(SolveStatus::kMaxIterations, state.z, state.w);
    }
  }
  return finish(SolveStatus::kMaxIterations, state.z, state.w);
}

}  // namespace xpipg
