#ifndef HORIZON_INITIAL_DATA_HPP
#define HORIZON_INITIAL_DATA_HPP

#include <string>

#include "horizon/curvature.hpp"
#include "horizon/fields.hpp"

namespace horizon {

/// A Riemannian chart together with a Killing vector field of constant
/// length: the initial data of the characteristic problem. Constraints
/// (L_V sigma = 0, sigma(V,V) constant, V nowhere zero) are checked by
/// validate() on a sample grid, not at construction.
struct InitialDataSet {
  Chart chart;
  MetricField sigma;  // riemannian
  VectorField V;
  std::string label;
};

struct ValidationOptions {
  int grid_per_axis = 11;
  double margin = 0.0;
  double tol_killing = 1e-9;
  double tol_length = 1e-9;
};

struct ValidationReport {
  double max_killing_residual = 0.0;
  double length_residual = 0.0;
  double sigma_vv_mean = 0.0;
  double min_vv = 0.0;
  double kappa = 0.0;
  bool killing_ok = false;
  bool length_ok = false;
  bool nowhere_zero_ok = false;
  int points = 0;
  bool passed() const { return killing_ok && length_ok && nowhere_zero_ok; }
};

/// Frobenius norm of (L_V sigma)(p) relative to the norm of sigma(p).
double killing_residual(const InitialDataSet& data, const Vec& p);

/// max_p |sigma(V,V)(p) - mean| / mean over the given points.
double length_residual(const InitialDataSet& data, const std::vector<Vec>& pts);

ValidationReport validate(const InitialDataSet& data,
                          const ValidationOptions& opts = {});

/// Surface gravity kappa = sqrt(mean sigma(V,V)); throws ValidationError when
/// the length constraint fails beyond tolerance.
double surface_gravity(const InitialDataSet& data,
                       const ValidationOptions& opts = {});

/// Connection one-form at p: omega_i = sigma_{ij} V^j / kappa, so that
/// omega(V) = kappa.
Vec connection_one_form(const InitialDataSet& data, const Vec& p, double kappa);

/// The same one-form as a field of expressions (for exterior derivatives and
/// Lie derivatives); kappa enters as the validated global constant.
OneFormField connection_one_form_field(const InitialDataSet& data,
                                       double kappa);

/// Induced lightlike metric g_{ij} = sigma_{ij} - omega_i omega_j; positive
/// semidefinite with kernel spanned by V.
Mat degenerate_metric(const InitialDataSet& data, const Vec& p, double kappa);

/// Lie derivative of a one-form along X: V^j d_j w_i + w_j d_i X^j.
Vec lie_derivative_oneform(const OneFormField& w, const VectorField& X,
                           const Vec& p);

}  // namespace horizon

#endif
