#ifndef HORIZON_VERIFICATION_HPP
#define HORIZON_VERIFICATION_HPP

#include "horizon/catalog.hpp"
#include "horizon/foliation.hpp"
#include "horizon/report.hpp"

namespace horizon {

/// Thresholds of the verification suite. Every value is pinned here; the CLI
/// can only override them explicitly via --tol-* flags.
struct VerifyTolerances {
  double kappa_exact = 1e-12;     // closed-form kappa against exact values
  double kappa_formula = 1e-8;    // kappa values given through formulas
  double kappa_paths = 1e-9;      // closed-form vs numerically induced kappa
  double vacuum = 1e-8;           // relative Ricci residual
  double induced = 1e-7;          // induced data componentwise deviation
  double q1_generic = 1e-7;       // q1 vs numeric first derivative
  double q1_kerr = 1e-5;
  double q1_anchor = 1e-12;       // q1(V,V)+2kappa, q1(V,X)
  double slope_lo = 1.9;          // remainder order window
  double slope_hi = 2.1;
  double lie_dt_row = 1e-6;       // |L_t^m g(d_t, .)|, m = 1, 2
  double commutator = 1e-8;       // |[W, d_t]|
  double nabla_t_w = 1e-8;        // |nabla_t W + kappa d_t|
  double lemma_transversal = 1e-6;
  double reconstruction = 1e-12;  // |sigma - (g|_H + omega omega)|
  double omega_v = 1e-12;         // |omega(V) - kappa|
  double lie_v_omega = 1e-10;
  double kernel_eig = 1e-10;      // smallest |eigenvalue| of the null metric
  double kernel_dir = 1e-8;       // kernel direction against V
  double equivariance = 1e-8;
  double jet_fd = 1e-6;           // jet coefficients vs finite differences
  double riemann_sym = 1e-10;     // symmetries + first Bianchi, relative
  double null_drift = 1e-10;
  double wall_seconds = 300.0;
  double killing = 1e-9;          // data set admission
  double length = 1e-9;
};

struct VerifyOptions {
  std::vector<std::string> entries;  // empty = the full catalog
  int theta_grid = 7;
  int vacuum_grid = 5;
  double null_drift_t_max = 0.1;
  FoliationOptions foliation;
  VerifyTolerances tol;
};

struct VerifySummary {
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;
  bool all_pass = true;
};

/// Runs the acceptance suite: exact surface-gravity reproduction, vacuum
/// residuals, induced-data oracle, the first-derivative theorem at m=1, the
/// O(t^2) remainder order, the gauge identities, the structural identities of
/// the induced data, diffeomorphism equivariance, and the engine-level
/// checks. Independent per-entry work fans out to a worker pool; the report
/// order is fixed.
VerifySummary run_verification(const VerifyOptions& opts = {});

/// Criterion ids are "<n>.<entry>.<name>"; this maps a check id to its
/// top-level criterion number 1..9.
int criterion_of(const std::string& check_id);

}  // namespace horizon

#endif
