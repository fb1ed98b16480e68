#ifndef HORIZON_CURVATURE_HPP
#define HORIZON_CURVATURE_HPP

#include "horizon/fields.hpp"

// Pointwise tensor calculus on a chart. All derivatives come from jets of the
// component expressions, so results are exact to machine precision for
// analytic fields; nothing is differentiated symbolically.
//
// Sign conventions, fixed once:
//   R(X,Y,Z,W) = g( (nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y]) Z, W ),
//   stored lowered as R[i][j][k][l] = R(d_i, d_j, d_k, d_l);
//   Ric_{jk} = g^{il} R_{ijkl}  (trace over the first and last slots).
// Under these conventions the unit round sphere has Ric = +g and
// R_{theta phi theta phi} = -sin^2(theta).

namespace horizon {

/// Christoffel symbols Gamma^k_{ij} of the Levi-Civita connection at p.
/// Rejects metrics that are singular at p (e.g. induced lightlike metrics).
Rank3 christoffel(const MetricField& g, const Vec& p);

/// Christoffel symbols together with their coordinate gradient
/// d_l Gamma^k_{ij}, stored as dgamma.a[l][k][i][j]. Needs order-2 jets.
struct ChristoffelDerivs {
  Rank3 gamma;
  Rank4 dgamma;
};
ChristoffelDerivs christoffel_with_grad(const MetricField& g, const Vec& p);

/// Lowered curvature tensor R_{ijkl} at p, conventions as above.
Rank4 riemann(const MetricField& g, const Vec& p);

/// Ricci tensor Ric_{jk} = g^{il} R_{ijkl} at p.
Mat ricci(const MetricField& g, const Vec& p);

/// Covariant derivative of a vector field, out(i, j) = (nabla_i X)^j.
Mat cov_deriv_vector(const MetricField& g, const VectorField& X, const Vec& p);

/// Lie derivative of the metric along X:
/// (L_X g)_{ij} = X^k d_k g_{ij} + g_{kj} d_i X^k + g_{ik} d_j X^k.
Mat lie_derivative_metric(const MetricField& g, const VectorField& X,
                          const Vec& p);

/// Exterior derivative of a one-form, out(i, j) = d_i w_j - d_j w_i.
Mat exterior_derivative_oneform(const OneFormField& w, const Vec& p);

/// Orthonormal basis of the sigma-orthogonal complement of V at p.
/// Deterministic: drops the coordinate direction with the largest normalized
/// projection onto V (first on ties), then Gram-Schmidt in chart order.
Frame orthogonal_complement_basis(const MetricField& sigma,
                                  const VectorField& V, const Vec& p);
Frame orthogonal_complement_basis(const MetricField& sigma, const Vec& Vp,
                                  const Vec& p);

/// Inverse of the metric value, with a conditioning guard that rejects
/// degenerate metrics instead of returning garbage.
Mat metric_inverse(const Mat& g);

}  // namespace horizon

#endif
