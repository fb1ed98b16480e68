#include "horizon/expansion.hpp"

#include <cmath>
#include <limits>

#include "horizon/curvature.hpp"
#include "horizon/numerics.hpp"

namespace horizon {

namespace {

struct FramePieces {
  Frame frame;
  Vec V3;
  Mat ric;    // coordinate Ricci of sigma
  Mat sig;    // sigma at p
  Mat dv;     // (nabla_i V)^j
  Vec nv[2];  // nabla_{e_a} V as coordinate vectors
};

FramePieces frame_pieces(const InitialDataSet& data, const Vec& p) {
  FramePieces fp;
  fp.V3 = data.V.eval(p);
  fp.frame = orthogonal_complement_basis(data.sigma, fp.V3, p);
  fp.ric = ricci(data.sigma, p);
  fp.sig = data.sigma.eval(p);
  fp.dv = cov_deriv_vector(data.sigma, data.V, p);
  for (int a = 0; a < 2; ++a) {
    Vec out(3);
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int i = 0; i < 3; ++i) acc += fp.frame.vectors[a][i] * fp.dv(i, j);
      out[j] = acc;
    }
    fp.nv[a] = out;
  }
  return fp;
}

/// (Ric^sigma + 2 kappa^-2 sigma(grad V, grad V))(e_a, e_b). The factor 2 is
/// pinned by three independent routes on the exact solutions: the ambient
/// curvature trace over the complement at the horizon, the foliation-extracted
/// first derivative, and the transversal gradient computed from jets of L.
Mat complement_block(const FramePieces& fp, double kappa) {
  Mat blk(2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const double r = pair(fp.ric, fp.frame.vectors[a], fp.frame.vectors[b]);
      const double s = pair(fp.sig, fp.nv[a], fp.nv[b]);
      blk(a, b) = r + 2.0 * s / (kappa * kappa);
    }
  return blk;
}

}  // namespace

Q1Result q1(const InitialDataSet& data, const Vec& p, double kappa) {
  const FramePieces fp = frame_pieces(data, p);
  const Mat blk = complement_block(fp, kappa);

  Q1Result out;
  out.base = p;
  out.kappa = kappa;
  out.V3 = fp.V3;
  out.frame = fp.frame;
  out.q1_frame = Mat(3);
  out.q1_frame(0, 0) = -2.0 * kappa;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      out.q1_frame(1 + a, 1 + b) = blk(a, b) / kappa;

  const OneFormField omega = connection_one_form_field(data, kappa);
  const Mat dw = exterior_derivative_oneform(omega, p);
  out.a_components = Mat(2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      out.a_components(a, b) =
          (blk(a, b) + pair(dw, fp.frame.vectors[a], fp.frame.vectors[b])) /
          (2.0 * kappa);
  return out;
}

Mat transversal_gradient(const InitialDataSet& data, const Vec& p,
                         double kappa) {
  return q1(data, p, kappa).a_components;
}

Mat q1_coordinates(const InitialDataSet& data, const Vec& p, double kappa) {
  const Q1Result r = q1(data, p, kappa);
  const Mat sig = data.sigma.eval(p);
  // Coefficients of d_i in the sigma-orthonormal frame {V/kappa, e_a}:
  // d_i = (omega_i / kappa) V + sum_a sigma(d_i, e_a) e_a.
  Vec omega = connection_one_form(data, p, kappa);
  Mat c(3);  // c(i, a) = sigma(d_i, e_a)
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 2; ++a) {
      double acc = 0.0;
      for (int j = 0; j < 3; ++j) acc += sig(i, j) * r.frame.vectors[a][j];
      c(i, a) = acc;
    }
  Mat out(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double acc =
          (omega[i] / kappa) * (omega[j] / kappa) * r.q1_frame(0, 0);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          acc += c(i, a) * c(j, b) * r.q1_frame(1 + a, 1 + b);
      out(i, j) = acc;
    }
  return out;
}

FirstOrderMetric::FirstOrderMetric(InitialDataSet data, double kappa)
    : data_(std::move(data)), kappa_(kappa) {}

Mat FirstOrderMetric::eval_adapted(double t, const Vec& p) const {
  const Vec omega = connection_one_form(data_, p, kappa_);
  const Mat deg = degenerate_metric(data_, p, kappa_);
  const Mat q1c = q1_coordinates(data_, p, kappa_);
  Mat g(4);
  for (int i = 0; i < 3; ++i) {
    g(0, 1 + i) = g(1 + i, 0) = omega[i] / kappa_;
    for (int j = 0; j < 3; ++j) g(1 + i, 1 + j) = deg(i, j) + t * q1c(i, j);
  }
  return g;
}

namespace {

/// q1 embedded as a 4x4 frame matrix (the d_t row and column vanish).
Mat q1_frame4(const Q1Result& r) {
  Mat q(4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q(1 + i, 1 + j) = r.q1_frame(i, j);
  return q;
}

/// Order-0 frame dictionary: ghat(d_t, V) = 1, ghat(e_a, e_b) = delta_ab,
/// all other entries zero.
Mat order0_frame4() {
  Mat m(4);
  m(0, 1) = m(1, 0) = 1.0;
  m(2, 2) = m(3, 3) = 1.0;
  return m;
}

Mat frame_matrix(const ExpansionRecord& rec) {
  Mat F(4);
  F(0, 0) = 1.0;
  for (int i = 0; i < 3; ++i) {
    F(1 + i, 1) = rec.V3[i];
    F(1 + i, 2) = rec.frame.vectors[0][i];
    F(1 + i, 3) = rec.frame.vectors[1][i];
  }
  return F;
}

}  // namespace

CompareReport compare_expansion(const SpacetimeSolution& sol,
                                const std::vector<Vec>& bases,
                                const FoliationOptions& opts) {
  sol.require_horizon_data();
  const InitialDataSet& data = sol.closed_form_data;
  const double kappa = sol.kappa_closed_form;

  CompareReport rep;
  std::vector<Q1Result> q1s;
  for (const Vec& base : bases) {
    const ExpansionRecord rec = pullback_metric_jet(sol, base, opts);
    const Q1Result r = q1(data, base, kappa);
    q1s.push_back(r);
    const double dev = max_abs(rec.in_frame[1] - q1_frame4(r));
    rep.q1_deviation_per_base.push_back(dev);
    rep.max_q1_deviation = std::max(rep.max_q1_deviation, dev);
  }

  // O(t^2) remainder of the first-order metric against the exact solution.
  rep.remainder_ts = {1e-2, 3e-3, 1e-3, 3e-4};
  FoliationOptions ropts = opts;
  FoliationMap fmap = evolve_foliation(sol, bases, rep.remainder_ts, ropts);
  const Mat m0 = order0_frame4();
  double scale = 1.0;
  for (const Q1Result& r : q1s)
    scale = std::max(scale, max_abs(r.q1_frame));
  for (std::size_t ti = 0; ti < rep.remainder_ts.size(); ++ti) {
    const double t = rep.remainder_ts[ti];
    double worst = 0.0;
    for (std::size_t b = 0; b < bases.size(); ++b) {
      const FoliationTrack& track = fmap.tracks[b];
      const auto it = std::find_if(
          track.samples.begin(), track.samples.end(),
          [&](const FoliationSample& s) { return std::fabs(s.t - t) < 1e-15; });
      if (it == track.samples.end())
        throw Error("compare_expansion: missing remainder sample");
      const Mat ghat = adapted_metric(sol, *it);
      ExpansionRecord tmp;
      tmp.base = bases[b];
      tmp.V3 = q1s[b].V3;
      tmp.frame = q1s[b].frame;
      const Mat F = frame_matrix(tmp);
      const Mat exact = mat_mul(transpose(F), mat_mul(ghat, F));
      const Mat predict = m0 + t * q1_frame4(q1s[b]);
      worst = std::max(worst, frobenius_norm(exact - predict));
    }
    rep.remainder_norms.push_back(worst);
  }

  // A linear-in-t exact solution leaves only integrator noise; the O(t^2)
  // bound then holds with constant zero and a slope fit is meaningless.
  double rmax = 0.0;
  for (double r : rep.remainder_norms) rmax = std::max(rmax, r);
  if (rmax < 1e-11 * scale) {
    rep.remainder_at_noise_floor = true;
    rep.remainder_slope = std::numeric_limits<double>::quiet_NaN();
  } else {
    rep.remainder_slope = loglog_slope(rep.remainder_ts, rep.remainder_norms);
  }
  return rep;
}

InitialDataSet pullback_data(const InitialDataSet& data,
                             const CoordinateChange& change) {
  const int n = data.chart.dim();
  if (static_cast<int>(change.forward.size()) != n ||
      static_cast<int>(change.derivative.size()) != n)
    throw Error("coordinate change needs one map and derivative per coordinate");

  std::vector<std::vector<Expression>> sig(n, std::vector<Expression>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Expression pulled = data.sigma.at(i, j).substituted(change.forward);
      sig[i][j] = sig[j][i] =
          change.derivative[i] * change.derivative[j] * pulled;
    }
  std::vector<Expression> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = data.V.at(i).substituted(change.forward) / change.derivative[i];

  return InitialDataSet{change.new_chart,
                        MetricField(change.new_chart, Signature::kRiemannian,
                                    std::move(sig)),
                        VectorField(change.new_chart, std::move(v)),
                        data.label + " (pulled back)"};
}

double q1_equivariance_residual(const InitialDataSet& data,
                                const CoordinateChange& change, double kappa,
                                const std::vector<Vec>& new_points) {
  const InitialDataSet pulled = pullback_data(data, change);
  double worst = 0.0;
  for (const Vec& pn : new_points) {
    std::span<const double> pt(pn.a.data(), pn.n);
    Vec pold(pn.n);
    Vec deriv(pn.n);
    for (int i = 0; i < pn.n; ++i) {
      pold[i] = change.forward[i].eval(pt, change.new_chart.param_values);
      deriv[i] = change.derivative[i].eval(pt, change.new_chart.param_values);
    }
    const Mat lhs = q1_coordinates(pulled, pn, kappa);
    const Mat q_old = q1_coordinates(data, pold, kappa);
    Mat rhs(pn.n);
    for (int i = 0; i < pn.n; ++i)
      for (int j = 0; j < pn.n; ++j)
        rhs(i, j) = deriv[i] * deriv[j] * q_old(i, j);
    worst = std::max(worst, max_abs(lhs - rhs));
  }
  return worst;
}

}  // namespace horizon
