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

// Extrapolated proportional-integral projected gradient method (xPIPG).
//
// One iteration maps (xi, eta) to
//
//   z+   = proj_D[xi - alpha (P xi + q + H^T eta)]
//   w+   = proj_{K polar}[eta + beta (H (2 z+ - xi) - g)]
//   xi+  = (1 - rho) xi + rho z+
//   eta+ = (1 - rho) eta + rho w+
//
// With alpha (||P|| + beta ||H||^2) < 1 and rho in (0, 2) the map is averaged,
// so the successive differences z+ - z and w+ - w converge. A zero limit means
// the iterates approach a primal-dual optimal pair; a nonzero dual limit is a
// proof of primal infeasibility and a nonzero primal limit a proof of dual
// infeasibility. rho = 1 is plain PIPG.

#ifndef XPIPG_SOLVER_HPP
#define XPIPG_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xpipg/problem.hpp"
#include "xpipg/spectral.hpp"

namespace xpipg {

enum class SolveStatus {
  kOptimal,
  kPrimalInfeasible,
  kDualInfeasible,
  kMaxIterations,
  kNumericalFailure,
};

std::string_view to_string(SolveStatus status);

struct SolverConfig {
  double rho = 1.6;    // extrapolation factor, strictly inside (0, 2)
  double omega = 1.0;  // beta = omega * alpha
  double safety = 0.9;

  double eps_abs = 1e-4;  // scaled displacement tolerance
  double eps_fea = 1e-4;  // KKT residual tolerance for optimal termination
  double eps_inf = 1e-4;  // slack in the primal infeasibility test
  double certificate_tol = 1e-6;

  std::int64_t max_iterations = 200000;
  int check_interval = 10;
  // Consecutive checks a dual-infeasibility candidate must survive.
  int dual_confirmations = 3;

  // Step-size overrides. If only alpha is given, beta = omega * alpha.
  std::optional<double> alpha;
  std::optional<double> beta;

  double power_tol = kDefaultPowerTolerance;
  int power_max_iterations = kDefaultPowerMaxIterations;
  std::uint64_t power_seed = 0;

  double divergence_bound = 1e12;
  bool record_trace = false;

  // Starting point; defaults are xi = proj_D[0], eta = 0.
  std::optional<Vector> initial_xi;
  std::optional<Vector> initial_eta;
};

// Throws std::invalid_argument describing the first bad field.
void validate_config(const SolverConfig& config);

struct SolverState {
  Vector xi;
  Vector eta;
  Vector z;
  Vector z_prev;
  Vector w;
  Vector w_prev;
  std::int64_t iteration = 0;
};

// z and w start equal to xi and eta; the first displacement is taken
// against the starting point.
SolverState initial_state(const ConicQP& qp,
                          const std::optional<Vector>& xi = std::nullopt,
                          const std::optional<Vector>& eta = std::nullopt);

struct IterateWorkspace {
  Vector grad;
  Vector dual_grad;
  Vector extrapolated;
  Vector constraint;
};

// Advances `state` by one iteration. Returns false if z or w became
// non-finite; z_prev and w_prev then hold the last finite iterates.
bool iterate(SolverState& state, const ConicQP& qp, const StepSizes& steps,
             double rho, IterateWorkspace& ws);
SolverState iterate(const SolverState& state, const ConicQP& qp,
                    const StepSizes& steps, double rho);

// Classification by scaled successive differences
//   primal = ||z - z_prev|| / (alpha rho),  dual = ||w - w_prev|| / (beta rho).
// Both may be flagged at once.
struct DisplacementTest {
  double primal = 0.0;
  double dual = 0.0;
  bool optimal = false;
  bool primal_infeasible = false;
  bool dual_infeasible = false;
};

DisplacementTest check_displacement(const SolverState& state,
                                    const StepSizes& steps, double rho,
                                    double eps_abs);

// Residuals of the box KKT test with r = -Pz - q - H^T w:
//   equality = ||Hz - g||_inf
//   upper    = ||(upper - z) .* max(0, r)||_inf
//   lower    = ||(lower - z) .* min(0, r)||_inf
// An entry facing an infinite bound contributes |r_i| instead of inf * |r_i|,
// so a free coordinate passes only when its reduced gradient is small.
// For cones other than {0} the first residual generalizes to
// ||y - proj_K(y + w)||_inf with y = Hz - g, which vanishes iff y is in K, w is
// in the polar cone and <y, w> = 0; for K = {0} it is exactly ||Hz - g||_inf.
struct FeasibilityResiduals {
  double equality = 0.0;
  double upper = 0.0;
  double lower = 0.0;

  double max() const;
};

FeasibilityResiduals feasibility_residuals(const ConicQP& qp, const Vector& z,
                                           const Vector& w);
bool check_feasible_termination(const ConicQP& qp, const Vector& z,
                                const Vector& w, double eps_fea);

// inf_{z in D} <Hz - g, w - w_prev>; -inf when unbounded below.
double infeasibility_value(const ConicQP& qp, const Vector& w,
                           const Vector& w_prev);

// True iff infeasibility_value + eps_inf > 0 and, for cones other than {0},
// w - w_prev lies in the polar cone.
bool check_infeasible_termination(const ConicQP& qp, const Vector& w,
                                  const Vector& w_prev, double eps_inf);

enum class CertificateKind { kPrimalInfeasibility, kDualInfeasibility };

struct IdentityCheck {
  std::string name;
  double residual = 0.0;
  double bound = 0.0;
  bool passed = false;
};

struct CertificateDiagnostics {
  std::vector<IdentityCheck> checks;
  // The strict inequality that turns the limit identities into a proof:
  // inf_D <Hz - g, w> > sup_K <y, w> for primal, <q, z> < 0 for dual.
  bool strict = false;

  bool identities_hold() const;
  bool certifies() const { return strict && identities_hold(); }
};

struct Certificate {
  CertificateKind kind = CertificateKind::kPrimalInfeasibility;
  Vector direction;  // raw w - w_prev (length m) or z - z_prev (length n)
  CertificateDiagnostics diagnostics;
};

// Evaluates the limit identities satisfied by the difference vectors.
//
// Primal, direction w:
//   polar_membership:    w in K polar
//   separation_identity: inf_D <Hz - g, w> - sup_K <y, w> - ||w||^2/(rho beta)
//                        within tol * max(1, ||w||^2)
// Dual, direction z (bounds relative to ||z||_inf):
//   cone_membership:     Hz in K
//   null_space:          ||Pz||_inf <= tol * ||z||_inf
//   recession:           z in rec D
//   improving_identity:  <q, z> + ||z||^2/(rho alpha) within
//                        tol * max(|<q, z>|, ||z||^2/(rho alpha))
// Never throws.
CertificateDiagnostics certificate_check(const ConicQP& qp,
                                         const Certificate& certificate,
                                         double rho, const StepSizes& steps,
                                         double tol);

struct TraceRow {
  std::int64_t iteration = 0;
  double primal_displacement = 0.0;
  double dual_displacement = 0.0;
  FeasibilityResiduals residuals;
  double infeasibility_value = 0.0;
};

struct SolveStats {
  std::int64_t iterations = 0;
  double primal_displacement = 0.0;
  double dual_displacement = 0.0;
  FeasibilityResiduals residuals;
  double infeasibility_value = 0.0;
  double elapsed_seconds = 0.0;
  StepSizes steps;
  double norm_p = 0.0;  // inflated estimates used for the step sizes
  double norm_h = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kMaxIterations;
  Vector z;
  Vector w;
  std::optional<Certificate> certificate;
  SolveStats stats;
  std::vector<TraceRow> trace;  // filled when config.record_trace
  std::string warning;
};

// Throws std::invalid_argument if validate(qp) is non-empty or the config is
// invalid.
SolveResult solve(const ConicQP& qp, const SolverConfig& config = {});

}  // namespace xpipg

#endif  // XPIPG_SOLVER_HPP
