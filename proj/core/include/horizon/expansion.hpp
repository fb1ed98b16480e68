#ifndef HORIZON_EXPANSION_HPP
#define HORIZON_EXPANSION_HPP

#include "horizon/foliation.hpp"
#include "horizon/initial_data.hpp"

namespace horizon {

/// First-order expansion coefficients computed from initial data alone, in
/// the sigma-orthonormal frame {V, e_2, e_3}:
///   q1(V,V) = -2 kappa,  q1(V, e_a) = 0,
///   q1(e_a, e_b) = (Ric^sigma + 2 kappa^-2 sigma(grad V, grad V))(e_a,e_b)/kappa.
struct Q1Result {
  Vec base;
  double kappa = 0.0;
  Vec V3;
  Frame frame;        // e_2, e_3
  Mat q1_frame;       // 3x3, frame order (V, e_2, e_3)
  Mat a_components;   // 2x2 transversal gradient A(e_a, e_b) on the complement
};

Q1Result q1(const InitialDataSet& data, const Vec& p, double kappa);

/// Transversal gradient A(X,Y) = g(nabla_X d_t, Y) on the complement:
/// (Ric^sigma + 2 kappa^-2 sigma(grad V, grad V) + d omega) / (2 kappa).
/// Its symmetric part is q1/2, its antisymmetric part d omega / (2 kappa).
Mat transversal_gradient(const InitialDataSet& data, const Vec& p,
                         double kappa);

/// Coordinate components of q1 by tensorial extension of the frame values.
Mat q1_coordinates(const InitialDataSet& data, const Vec& p, double kappa);

/// The first-order metric jet in adapted coordinates (t, horizon coords):
/// order 0 from the frame dictionary, order 1 from q1; the d_t row carries no
/// linear term. Valid to O(t^2).
class FirstOrderMetric {
 public:
  FirstOrderMetric(InitialDataSet data, double kappa);

  /// 4x4 adapted components at null time t over the horizon point p.
  Mat eval_adapted(double t, const Vec& p) const;

  double kappa() const { return kappa_; }

 private:
  InitialDataSet data_;
  double kappa_;
};

/// Deviation report of the data-side q1 against the foliation-extracted
/// first derivative, plus the O(t^2) remainder fit of the first-order metric
/// against the exact solution.
struct CompareReport {
  double max_q1_deviation = 0.0;  // frame components, all entries
  double remainder_slope = 0.0;   // log-log fit over remainder_ts
  bool remainder_at_noise_floor = false;
  std::vector<double> remainder_ts;
  std::vector<double> remainder_norms;  // max over bases, Frobenius in frame
  std::vector<double> q1_deviation_per_base;
};

CompareReport compare_expansion(const SpacetimeSolution& sol,
                                const std::vector<Vec>& bases,
                                const FoliationOptions& opts = {});

/// A componentwise analytic coordinate change x_old^i = f_i(x_new^i),
/// together with the derivative expressions f_i'; enough for the
/// diffeomorphism-equivariance test without symbolic differentiation.
struct CoordinateChange {
  Chart new_chart;
  std::vector<Expression> forward;     // over new_chart coordinates
  std::vector<Expression> derivative;  // d f_i / d x_new^i, over new_chart
};

/// Pullback of the data under the coordinate change: sigma' = phi^* sigma,
/// V' = dphi^{-1} V.
InitialDataSet pullback_data(const InitialDataSet& data,
                             const CoordinateChange& change);

/// max |q1(phi^* sigma, phi^* V) - phi^* q1(sigma, V)| in coordinate
/// components over the given points of the new chart.
double q1_equivariance_residual(const InitialDataSet& data,
                                const CoordinateChange& change, double kappa,
                                const std::vector<Vec>& new_points);

}  // namespace horizon

#endif
