#ifndef HORIZON_FOLIATION_HPP
#define HORIZON_FOLIATION_HPP

#include <array>
#include <vector>

#include "horizon/catalog.hpp"

namespace horizon {

/// The canonical transversal vector L at a horizon point: the unique
/// lightlike solution of g(L, V) = 1, g(L, e_a) = 0 for e_a spanning the
/// sigma-orthogonal complement of V inside the horizon tangent space.
struct TransversalSolve {
  Vec point;  // horizon chart coordinates
  Vec L;      // 4 spacetime components
  double res_g_LV = 0.0;      // g(L,V) - 1
  double res_g_Le = 0.0;      // max_a |g(L, e_a)|
  double res_g_LL = 0.0;      // g(L,L)
};

TransversalSolve canonical_transversal(const SpacetimeSolution& sol,
                                       const Vec& p3);

/// L together with its first derivatives in the horizon coordinates,
/// computed by running the same solve in jet arithmetic. Feeds the exact
/// initial condition of the variational equations.
std::array<Jet, 4> canonical_transversal_jet(const SpacetimeSolution& sol,
                                             const Vec& p3);

using Mat43 = std::array<std::array<double, 3>, 4>;

/// One record along a geodesic of the foliation: position, velocity, and the
/// sensitivity of both to the horizon base coordinates.
struct FoliationSample {
  double t = 0.0;
  Vec x;       // spacetime coordinates
  Vec u;       // velocity = the d_t field along the track
  Mat43 jx{};  // dx^mu / dxi^k, xi = horizon coordinates of the base
  Mat43 ju{};  // du^mu / dxi^k
  double null_norm = 0.0;  // g(u,u), conserved up to integrator error
};

struct FoliationTrack {
  Vec base;  // horizon chart coordinates
  TransversalSolve transversal;
  std::vector<FoliationSample> samples;  // ascending in t, contains t = 0
  double max_null_drift = 0.0;
};

struct FoliationMap {
  std::vector<double> t_samples;
  std::vector<FoliationTrack> tracks;
  double rk_step = 0.0;
};

struct FoliationOptions {
  /// Differencing step for the t-derivatives of the pulled-back metric.
  double h = 1e-3;
  /// Highest Lie derivative extracted.
  int m_max = 3;
  /// RK4 steps from the horizon to the farthest requested |t|, per direction.
  int steps = 48;
  /// Tolerance on |nabla_X W - omega(X) W| in induce_numeric; a violation
  /// signals a mis-specified horizon locus.
  double parallel_tol = 1e-6;
};

/// Integrates the geodesic flow of the canonical transversal from every base
/// point, with the variational (sensitivity) equations alongside; records
/// state and Jacobian at each requested t (0 is always included).
FoliationMap evolve_foliation(const SpacetimeSolution& sol,
                              const std::vector<Vec>& bases,
                              const std::vector<double>& t_targets,
                              const FoliationOptions& opts = {});

/// Components of the pulled-back metric g(dPsi ., dPsi .) in adapted
/// coordinates (t, horizon coordinates) at one sample.
Mat adapted_metric(const SpacetimeSolution& sol, const FoliationSample& s);

/// Frame-indexed t-derivatives of the pulled-back metric at a base point.
struct ExpansionRecord {
  enum class Provenance { kNumeric, kClosedForm };
  Vec base;
  Vec V3;                    // Killing direction in horizon coordinates
  Frame frame;               // sigma-orthonormal basis of the complement
  std::vector<Mat> adapted;  // m -> d^m/dt^m of adapted components at t=0
  std::vector<Mat> in_frame; // m -> same, contracted on {d_t, V, e_2, e_3}
  std::vector<double> error_estimates;
  Provenance provenance = Provenance::kNumeric;
};

/// Extracts L_t^m g|_H for m = 0..m_max by Richardson-style central
/// differences of the pulled-back metric on t-samples {0, +-h, +-2h, +-3h}.
ExpansionRecord pullback_metric_jet(const SpacetimeSolution& sol,
                                    const Vec& base,
                                    const FoliationOptions& opts = {});

/// Numerically induced initial data, sampled pointwise on the horizon.
struct InducedData {
  std::vector<Vec> points;
  std::vector<Mat> sigma;
  std::vector<Vec> V;
  std::vector<Vec> omega;
  std::vector<double> kappa_pointwise;
  std::vector<double> parallel_residual;
  double kappa = 0.0;  // mean of omega(V) over the grid
};

/// Computes omega from nabla_X W = omega(X) W via the transversal pairing and
/// assembles sigma = g|_H + omega (x) omega pointwise. Throws FoliationError
/// when nabla_X W fails to be parallel to W beyond tolerance.
InducedData induce_numeric(const SpacetimeSolution& sol,
                           const std::vector<Vec>& grid,
                           const FoliationOptions& opts = {});

struct InducedComparison {
  double max_sigma_deviation = 0.0;
  double max_V_deviation = 0.0;
  double kappa_deviation = 0.0;
};

/// Componentwise deviation of numerically induced data from the closed form.
InducedComparison compare_with_closed_form(const SpacetimeSolution& sol,
                                           const InducedData& induced);

/// Residuals of the structural gauge identities at one base point.
struct IdentityReport {
  double commutator = 0.0;        // max |[W, d_t]| in adapted components
  double nabla_t_W = 0.0;         // max |nabla_t W + kappa d_t| at the base
  double lemma_transversal = 0.0; // |nabla_t A + A^2 - R(d_t,.,d_t,.)| at t=0
  std::array<double, 2> lie_dt_row{};  // m = 1, 2: max |L_t^m g(d_t, .)|
};

IdentityReport check_identities(const SpacetimeSolution& sol, const Vec& base,
                                const FoliationOptions& opts = {});

}  // namespace horizon

#endif
