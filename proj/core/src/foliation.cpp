#include "horizon/foliation.hpp"

#include <algorithm>
#include <cmath>

#include "horizon/curvature.hpp"
#include "horizon/numerics.hpp"

namespace horizon {

namespace {

// Scalar-generic helpers so the transversal solve can run both on doubles and
// on jets (for the exact sensitivity initial condition).

double scalar_const(double, double v) { return v; }
Jet scalar_const(const Jet& proto, double v) {
  return Jet::constant(v, proto.dim(), proto.order());
}
double scalar_value(double x) { return x; }
double scalar_value(const Jet& x) { return x.value(); }

template <class S>
S pair4(const S G[4][4], const std::array<S, 4>& x, const std::array<S, 4>& y) {
  S s = scalar_const(G[0][0], 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s = s + x[i] * G[i][j] * y[j];
  return s;
}

template <class S>
S pair3(const S g[3][3], const std::array<S, 3>& x, const std::array<S, 3>& y) {
  S s = scalar_const(g[0][0], 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = s + x[i] * g[i][j] * y[j];
  return s;
}

/// Gram-Schmidt complement of V inside a 3-dimensional sigma-chart, dropping
/// the coordinate direction most parallel to V (decided on values, so the
/// double and jet paths agree).
template <class S>
std::array<std::array<S, 3>, 2> complement_frame(const S sig[3][3],
                                                 const std::array<S, 3>& V) {
  using std::sqrt;
  const S zero = scalar_const(sig[0][0], 0.0);
  const S vv = pair3(sig, V, V);
  if (!(scalar_value(vv) > 0.0))
    throw Error("complement frame: sigma(V,V) not positive");

  int drop = 0;
  double best = -1.0;
  for (int i = 0; i < 3; ++i) {
    std::array<S, 3> ei{zero, zero, zero};
    ei[i] = scalar_const(zero, 1.0);
    const double sii = scalar_value(pair3(sig, ei, ei));
    const double sv = scalar_value(pair3(sig, ei, V));
    const double score = std::fabs(sv) / std::sqrt(sii * scalar_value(vv));
    if (score > best) {
      best = score;
      drop = i;
    }
  }

  std::array<std::array<S, 3>, 2> frame{
      std::array<S, 3>{zero, zero, zero}, std::array<S, 3>{zero, zero, zero}};
  int out = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == drop) continue;
    std::array<S, 3> e{zero, zero, zero};
    e[i] = scalar_const(zero, 1.0);
    const S cv = pair3(sig, e, V) / vv;
    for (int k = 0; k < 3; ++k) e[k] = e[k] - cv * V[k];
    for (int b = 0; b < out; ++b) {
      const S c = pair3(sig, e, frame[b]);
      for (int k = 0; k < 3; ++k) e[k] = e[k] - c * frame[b][k];
    }
    const S nn = pair3(sig, e, e);
    if (!(scalar_value(nn) > 0.0))
      throw Error("complement frame: degenerate directions");
    const S inv = scalar_const(zero, 1.0) / sqrt(nn);
    for (int k = 0; k < 3; ++k) e[k] = e[k] * inv;
    frame[out++] = e;
  }
  return frame;
}

/// Solves the transversal conditions g(L,V)=1, g(L,e_a)=0, g(L,L)=0 given the
/// metric, V and the complement frame pushed into the 4-chart. The affine
/// conditions leave a line L0 + s V; since V is lightlike the quadratic
/// condition is linear in s, so the solution is unique and closed-form.
template <class S>
std::array<S, 4> transversal_solve(const S G[4][4], const std::array<S, 4>& V4,
                                   const std::array<S, 4>& e2,
                                   const std::array<S, 4>& e3, int locus) {
  const S zero = scalar_const(G[0][0], 0.0);
  const S one = scalar_const(zero, 1.0);
  std::array<S, 4> T{zero, zero, zero, zero};
  T[locus] = one;

  const S gTV = pair4(G, T, V4);
  if (std::fabs(scalar_value(gTV)) < 1e-12)
    throw FoliationError(
        "transversal solve: locus direction pairs to zero with V (wrong "
        "horizon?)");
  const S delta = one / gTV;

  const S m00 = pair4(G, e2, e2);
  const S m01 = pair4(G, e2, e3);
  const S m11 = pair4(G, e3, e3);
  const S r0 = zero - delta * pair4(G, T, e2);
  const S r1 = zero - delta * pair4(G, T, e3);
  const S dt = m00 * m11 - m01 * m01;
  if (std::fabs(scalar_value(dt)) < 1e-14)
    throw FoliationError("transversal solve: degenerate complement Gram matrix");
  const S beta = (r0 * m11 - r1 * m01) / dt;
  const S gamma = (m00 * r1 - m01 * r0) / dt;

  std::array<S, 4> s4;
  for (int i = 0; i < 4; ++i)
    s4[i] = beta * e2[i] + gamma * e3[i] + delta * T[i];
  const S q = pair4(G, s4, s4);
  const S alpha = zero - q * scalar_const(zero, 0.5);

  std::array<S, 4> L;
  for (int i = 0; i < 4; ++i) L[i] = alpha * V4[i] + s4[i];
  return L;
}

std::vector<int> seed_slots(const SpacetimeSolution& sol) {
  std::vector<int> slots(4, -1);
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != sol.horizon.coord) slots[i] = k++;
  return slots;
}

}  // namespace

TransversalSolve canonical_transversal(const SpacetimeSolution& sol,
                                       const Vec& p3) {
  sol.require_horizon_data();
  const Vec p4 = sol.embed(p3);
  const Mat G = sol.metric.eval(p4);
  const Vec W4 = sol.W.eval(p4);
  if (std::fabs(W4[sol.horizon.coord]) > 1e-12 * std::max(1.0, max_abs(W4)))
    throw FoliationError("W is not tangent to the stated horizon locus");

  const InitialDataSet& data = sol.closed_form_data;
  const Mat sig = data.sigma.eval(p3);
  const Vec V3 = data.V.eval(p3);

  double sigA[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sigA[i][j] = sig(i, j);
  const auto frame3 =
      complement_frame<double>(sigA, {V3[0], V3[1], V3[2]});

  double GA[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) GA[i][j] = G(i, j);
  auto lift = [&](const std::array<double, 3>& v3) {
    Vec v(3);
    for (int k = 0; k < 3; ++k) v[k] = v3[k];
    const Vec v4 = sol.tangent_to_spacetime(v);
    return std::array<double, 4>{v4[0], v4[1], v4[2], v4[3]};
  };
  const std::array<double, 4> V4a{W4[0], W4[1], W4[2], W4[3]};
  const auto L =
      transversal_solve<double>(GA, V4a, lift(frame3[0]), lift(frame3[1]),
                                sol.horizon.coord);

  TransversalSolve out;
  out.point = p3;
  out.L = Vec(4);
  for (int i = 0; i < 4; ++i) out.L[i] = L[i];
  out.res_g_LV = pair4(GA, L, V4a) - 1.0;
  out.res_g_Le = std::max(std::fabs(pair4(GA, L, lift(frame3[0]))),
                          std::fabs(pair4(GA, L, lift(frame3[1]))));
  out.res_g_LL = pair4(GA, L, L);
  return out;
}

std::array<Jet, 4> canonical_transversal_jet(const SpacetimeSolution& sol,
                                             const Vec& p3) {
  sol.require_horizon_data();
  const Vec p4 = sol.embed(p3);
  const std::vector<int> slots = seed_slots(sol);

  const MetricJets gj = sol.metric.eval_jets_seeded(p4, 1, 3, slots);
  Jet GA[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) GA[i][j] = gj.g[i][j];

  std::array<Jet, 4> W4;
  std::span<const double> pt4(p4.a.data(), 4);
  for (int i = 0; i < 4; ++i)
    W4[i] = sol.W.at(i).eval_jet_seeded(pt4, sol.chart.param_values, 1, 3,
                                        slots);

  const InitialDataSet& data = sol.closed_form_data;
  const MetricJets sj = data.sigma.eval_jets(p3, 1);
  Jet sigA[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sigA[i][j] = sj.g[i][j];
  std::array<Jet, 3> V3;
  std::span<const double> pt3(p3.a.data(), 3);
  for (int i = 0; i < 3; ++i)
    V3[i] = data.V.at(i).eval_jet(pt3, data.chart.param_values, 1);

  const auto frame3 = complement_frame<Jet>(sigA, V3);
  const Jet zero = Jet::constant(0.0, 3, 1);
  auto lift = [&](const std::array<Jet, 3>& v3) {
    std::array<Jet, 4> v4{zero, zero, zero, zero};
    int k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != sol.horizon.coord) v4[i] = v3[k++];
    return v4;
  };
  return transversal_solve<Jet>(GA, W4, lift(frame3[0]), lift(frame3[1]),
                                sol.horizon.coord);
}

namespace {

struct GeoState {
  Vec x{4};
  Vec u{4};
  Mat43 jx{};
  Mat43 ju{};
};

GeoState axpy(const GeoState& s, double c, const GeoState& d) {
  GeoState r = s;
  for (int i = 0; i < 4; ++i) {
    r.x[i] += c * d.x[i];
    r.u[i] += c * d.u[i];
    for (int k = 0; k < 3; ++k) {
      r.jx[i][k] += c * d.jx[i][k];
      r.ju[i][k] += c * d.ju[i][k];
    }
  }
  return r;
}

GeoState rhs(const SpacetimeSolution& sol, const GeoState& s) {
  const ChristoffelDerivs cd = christoffel_with_grad(sol.metric, s.x);
  GeoState d;
  d.x = s.u;
  for (int mu = 0; mu < 4; ++mu) {
    double acc = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) acc += cd.gamma.a[mu][a][b] * s.u[a] * s.u[b];
    d.u[mu] = -acc;
  }
  for (int k = 0; k < 3; ++k) {
    for (int mu = 0; mu < 4; ++mu) {
      d.jx[mu][k] = s.ju[mu][k];
      double acc = 0.0;
      for (int nu = 0; nu < 4; ++nu) {
        double gg = 0.0;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            gg += cd.dgamma.a[nu][mu][a][b] * s.u[a] * s.u[b];
        acc += gg * s.jx[nu][k];
      }
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          acc += 2.0 * cd.gamma.a[mu][a][b] * s.u[a] * s.ju[b][k];
      d.ju[mu][k] = -acc;
    }
  }
  return d;
}

void rk4_step(const SpacetimeSolution& sol, GeoState& s, double dt) {
  const GeoState k1 = rhs(sol, s);
  const GeoState k2 = rhs(sol, axpy(s, 0.5 * dt, k1));
  const GeoState k3 = rhs(sol, axpy(s, 0.5 * dt, k2));
  const GeoState k4 = rhs(sol, axpy(s, dt, k3));
  GeoState next = axpy(s, dt / 6.0, k1);
  next = axpy(next, dt / 3.0, k2);
  next = axpy(next, dt / 3.0, k3);
  next = axpy(next, dt / 6.0, k4);
  s = next;
}

void check_state(const SpacetimeSolution& sol, const GeoState& s) {
  for (int i = 0; i < 4; ++i)
    if (!std::isfinite(s.x[i]) || !std::isfinite(s.u[i]))
      throw FoliationError("geodesic state became non-finite");
  if (!sol.chart.contains(s.x))
    throw FoliationError("geodesic left the chart domain (reduce t_max)");
}

FoliationSample record(const SpacetimeSolution& sol, double t,
                       const GeoState& s) {
  FoliationSample smp;
  smp.t = t;
  smp.x = s.x;
  smp.u = s.u;
  smp.jx = s.jx;
  smp.ju = s.ju;
  smp.null_norm = pair(sol.metric.eval(s.x), s.u, s.u);
  return smp;
}

GeoState initial_state(const SpacetimeSolution& sol, const Vec& base) {
  GeoState s;
  s.x = sol.embed(base);
  const auto Lj = canonical_transversal_jet(sol, base);
  for (int i = 0; i < 4; ++i) {
    s.u[i] = Lj[i].value();
    for (int k = 0; k < 3; ++k) s.ju[i][k] = Lj[i].partial(k);
  }
  for (int k = 0; k < 3; ++k) s.jx[sol.tangent_axis(k)][k] = 1.0;
  return s;
}

}  // namespace

FoliationMap evolve_foliation(const SpacetimeSolution& sol,
                              const std::vector<Vec>& bases,
                              const std::vector<double>& t_targets,
                              const FoliationOptions& opts) {
  sol.require_horizon_data();
  std::vector<double> pos, neg;
  double t_extent = 0.0;
  for (double t : t_targets) {
    t_extent = std::max(t_extent, std::fabs(t));
    if (t > 0.0) pos.push_back(t);
    if (t < 0.0) neg.push_back(t);
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end(), std::greater<double>());
  const double base_step =
      (t_extent > 0.0) ? t_extent / std::max(1, opts.steps) : 0.0;

  FoliationMap fmap;
  fmap.t_samples.push_back(0.0);
  for (double t : neg) fmap.t_samples.push_back(t);
  for (double t : pos) fmap.t_samples.push_back(t);
  std::sort(fmap.t_samples.begin(), fmap.t_samples.end());
  fmap.rk_step = base_step;

  for (const Vec& base : bases) {
    FoliationTrack track;
    track.base = base;
    track.transversal = canonical_transversal(sol, base);
    const GeoState start = initial_state(sol, base);
    track.samples.push_back(record(sol, 0.0, start));

    for (const std::vector<double>* dir : {&pos, &neg}) {
      GeoState s = start;
      double t = 0.0;
      for (double target : *dir) {
        const double seg = target - t;
        const int nsteps =
            std::max(1, static_cast<int>(std::ceil(std::fabs(seg) / base_step)));
        const double dt = seg / nsteps;
        for (int i = 0; i < nsteps; ++i) {
          rk4_step(sol, s, dt);
          check_state(sol, s);
        }
        t = target;
        track.samples.push_back(record(sol, t, s));
      }
    }
    std::sort(track.samples.begin(), track.samples.end(),
              [](const FoliationSample& a, const FoliationSample& b) {
                return a.t < b.t;
              });
    for (const FoliationSample& smp : track.samples)
      track.max_null_drift =
          std::max(track.max_null_drift, std::fabs(smp.null_norm));
    fmap.tracks.push_back(std::move(track));
  }
  return fmap;
}

Mat adapted_metric(const SpacetimeSolution& sol, const FoliationSample& s) {
  const Mat G = sol.metric.eval(s.x);
  Mat D(4);
  for (int i = 0; i < 4; ++i) {
    D(i, 0) = s.u[i];
    for (int k = 0; k < 3; ++k) D(i, 1 + k) = s.jx[i][k];
  }
  Mat ghat(4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      double acc = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) acc += G(r, c) * D(r, mu) * D(c, nu);
      ghat(mu, nu) = ghat(nu, mu) = acc;
    }
  return ghat;
}

namespace {

struct TrackData {
  FoliationTrack track;
  std::vector<double> nodes;
  std::vector<Mat> ghat;
};

TrackData build_track_data(const SpacetimeSolution& sol, const Vec& base,
                           const FoliationOptions& opts) {
  const double h = opts.h;
  const std::vector<double> targets{-3 * h, -2 * h, -h, h, 2 * h, 3 * h};
  FoliationMap fmap = evolve_foliation(sol, {base}, targets, opts);
  TrackData td;
  td.track = std::move(fmap.tracks.front());
  for (const FoliationSample& s : td.track.samples) {
    td.nodes.push_back(s.t);
    td.ghat.push_back(adapted_metric(sol, s));
  }
  return td;
}

Mat stencil_matrix(const std::vector<Mat>& mats,
                   const std::vector<double>& weights,
                   const std::vector<int>& idx) {
  Mat out(mats.front().n);
  for (std::size_t s = 0; s < idx.size(); ++s)
    out = out + weights[s] * mats[idx[s]];
  return out;
}

/// m-th t-derivative at 0 from samples on `nodes`, full stencil, plus a
/// lower-order stencil for the error estimate.
void derivative_with_error(const std::vector<double>& nodes,
                           const std::vector<Mat>& mats, int m, Mat& deriv,
                           double& err) {
  const int nn = static_cast<int>(nodes.size());
  std::vector<int> all(nn);
  for (int i = 0; i < nn; ++i) all[i] = i;
  deriv = stencil_matrix(mats, fd_weights(0.0, nodes, m), all);
  if (m == 0) {
    err = 0.0;
    return;
  }
  // Subset stencil on the nodes within 2h.
  double h = 0.0;
  for (double t : nodes)
    if (t > 0.0) h = (h == 0.0) ? t : std::min(h, t);
  std::vector<int> sub;
  std::vector<double> sub_nodes;
  for (int i = 0; i < nn; ++i)
    if (std::fabs(nodes[i]) <= 2.0 * h + 1e-30) {
      sub.push_back(i);
      sub_nodes.push_back(nodes[i]);
    }
  const Mat coarse = stencil_matrix(mats, fd_weights(0.0, sub_nodes, m), sub);
  err = max_abs(deriv - coarse);
}

}  // namespace

ExpansionRecord pullback_metric_jet(const SpacetimeSolution& sol,
                                    const Vec& base,
                                    const FoliationOptions& opts) {
  if (opts.m_max < 0 || opts.m_max > 3)
    throw Error("pullback_metric_jet: m_max must be 0..3");
  const TrackData td = build_track_data(sol, base, opts);

  ExpansionRecord rec;
  rec.base = base;
  rec.V3 = sol.closed_form_data.V.eval(base);
  rec.frame = orthogonal_complement_basis(sol.closed_form_data.sigma,
                                          sol.closed_form_data.V, base);
  rec.provenance = ExpansionRecord::Provenance::kNumeric;

  Mat F(4);
  F(0, 0) = 1.0;
  for (int i = 0; i < 3; ++i) {
    F(1 + i, 1) = rec.V3[i];
    F(1 + i, 2) = rec.frame.vectors[0][i];
    F(1 + i, 3) = rec.frame.vectors[1][i];
  }
  const Mat Ft = transpose(F);

  for (int m = 0; m <= opts.m_max; ++m) {
    Mat d;
    double err = 0.0;
    derivative_with_error(td.nodes, td.ghat, m, d, err);
    rec.adapted.push_back(d);
    rec.in_frame.push_back(mat_mul(Ft, mat_mul(d, F)));
    rec.error_estimates.push_back(err);
  }
  return rec;
}

InducedData induce_numeric(const SpacetimeSolution& sol,
                           const std::vector<Vec>& grid,
                           const FoliationOptions& opts) {
  sol.require_horizon_data();
  InducedData out;
  double kappa_sum = 0.0;
  for (const Vec& p3 : grid) {
    const Vec p4 = sol.embed(p3);
    const Mat G = sol.metric.eval(p4);
    const Rank3 gam = christoffel(sol.metric, p4);

    std::span<const double> pt4(p4.a.data(), 4);
    std::vector<Jet> wj(4);
    for (int i = 0; i < 4; ++i)
      wj[i] = sol.W.at(i).eval_jet(pt4, sol.chart.param_values, 1);
    Vec W4(4);
    for (int i = 0; i < 4; ++i) W4[i] = wj[i].value();

    // Any transversal with g(T', W) = 1 extracts omega from the
    // proportionality nabla_X W = omega(X) W; use the locus direction.
    Vec T(4);
    T[sol.horizon.coord] = 1.0;
    double gTW = 0.0;
    for (int i = 0; i < 4; ++i) gTW += G(sol.horizon.coord, i) * W4[i];
    if (std::fabs(gTW) < 1e-12)
      throw FoliationError("induce_numeric: locus direction degenerate with W");

    Vec omega(3);
    double parallel_res = 0.0;
    const double wscale = std::max(1.0, max_abs(W4));
    for (int k = 0; k < 3; ++k) {
      const int ax = sol.tangent_axis(k);
      Vec nabla(4);
      for (int mu = 0; mu < 4; ++mu) {
        double acc = wj[mu].partial(ax);
        for (int b = 0; b < 4; ++b) acc += gam.a[mu][ax][b] * W4[b];
        nabla[mu] = acc;
      }
      double gNT = 0.0;
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) gNT += G(mu, nu) * nabla[mu] * T[nu];
      omega[k] = gNT / gTW;
      for (int mu = 0; mu < 4; ++mu)
        parallel_res = std::max(
            parallel_res, std::fabs(nabla[mu] - omega[k] * W4[mu]) / wscale);
    }
    if (parallel_res > opts.parallel_tol)
      throw FoliationError(
          "induce_numeric: nabla_X W is not parallel to W (residual " +
          std::to_string(parallel_res) +
          "); the horizon locus looks mis-specified");

    if (std::fabs(W4[sol.horizon.coord]) > 1e-10 * wscale)
      throw FoliationError("induce_numeric: W not tangent to the locus");
    const Vec V3 = sol.spacetime_to_tangent(W4);

    Mat sig(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        sig(i, j) = G(sol.tangent_axis(i), sol.tangent_axis(j)) +
                    omega[i] * omega[j];

    double kp = 0.0;
    for (int i = 0; i < 3; ++i) kp += omega[i] * V3[i];

    out.points.push_back(p3);
    out.sigma.push_back(sig);
    out.V.push_back(V3);
    out.omega.push_back(omega);
    out.kappa_pointwise.push_back(kp);
    out.parallel_residual.push_back(parallel_res);
    kappa_sum += kp;
  }
  out.kappa = kappa_sum / static_cast<double>(grid.size());
  return out;
}

InducedComparison compare_with_closed_form(const SpacetimeSolution& sol,
                                           const InducedData& induced) {
  const InitialDataSet& data = sol.closed_form_data;
  InducedComparison cmp;
  for (std::size_t i = 0; i < induced.points.size(); ++i) {
    const Vec& p = induced.points[i];
    const Mat scf = data.sigma.eval(p);
    const Vec vcf = data.V.eval(p);
    cmp.max_sigma_deviation =
        std::max(cmp.max_sigma_deviation, max_abs(induced.sigma[i] - scf));
    cmp.max_V_deviation =
        std::max(cmp.max_V_deviation, max_abs(induced.V[i] - vcf));
  }
  cmp.kappa_deviation = std::fabs(induced.kappa - sol.kappa_closed_form);
  return cmp;
}

IdentityReport check_identities(const SpacetimeSolution& sol, const Vec& base,
                                const FoliationOptions& opts) {
  const TrackData td = build_track_data(sol, base, opts);
  const int ns = static_cast<int>(td.nodes.size());
  IdentityReport rep;

  // Lemma rows: L_t^m ghat(d_t, .) = 0 for m >= 1.
  for (int m = 1; m <= 2; ++m) {
    Mat d;
    double err = 0.0;
    derivative_with_error(td.nodes, td.ghat, m, d, err);
    double worst = 0.0;
    for (int nu = 0; nu < 4; ++nu) worst = std::max(worst, std::fabs(d(0, nu)));
    rep.lie_dt_row[m - 1] = worst;
  }

  // Commutator [W, d_t] via the t-derivative of W in adapted components.
  {
    std::vector<Mat> wcols(ns, Mat(4));
    for (int s = 0; s < ns; ++s) {
      const FoliationSample& smp = td.track.samples[s];
      Mat D(4);
      for (int i = 0; i < 4; ++i) {
        D(i, 0) = smp.u[i];
        for (int k = 0; k < 3; ++k) D(i, 1 + k) = smp.jx[i][k];
      }
      const Vec w = sol.W.eval(smp.x);
      const Vec wa = solve(D, w);
      for (int i = 0; i < 4; ++i) wcols[s](0, i) = wa[i];
    }
    Mat d;
    double err = 0.0;
    derivative_with_error(td.nodes, wcols, 1, d, err);
    for (int i = 0; i < 4; ++i)
      rep.commutator = std::max(rep.commutator, std::fabs(d(0, i)));
  }

  // nabla_t W + kappa d_t at the base point.
  {
    const FoliationSample& s0 = *std::find_if(
        td.track.samples.begin(), td.track.samples.end(),
        [](const FoliationSample& s) { return s.t == 0.0; });
    const Vec p4 = s0.x;
    std::span<const double> pt4(p4.a.data(), 4);
    const Rank3 gam = christoffel(sol.metric, p4);
    std::vector<Jet> wj(4);
    for (int i = 0; i < 4; ++i)
      wj[i] = sol.W.at(i).eval_jet(pt4, sol.chart.param_values, 1);
    for (int mu = 0; mu < 4; ++mu) {
      double acc = 0.0;
      for (int a = 0; a < 4; ++a) {
        acc += s0.u[a] * wj[mu].partial(a);
        for (int b = 0; b < 4; ++b)
          acc += gam.a[mu][a][b] * s0.u[a] * wj[b].value();
      }
      rep.nabla_t_W = std::max(
          rep.nabla_t_W,
          std::fabs(acc + sol.kappa_closed_form * s0.u[mu]));
    }
  }

  // Transversal gradient identity nabla_t A = -A^2 + R(d_t, ., d_t, .) at
  // t=0, on the spatial adapted directions X_i = dPsi(d_i).
  {
    std::vector<Mat> A(ns, Mat(3));
    int i0 = -1;
    std::vector<std::array<Vec, 3>> thetas(ns);
    for (int s = 0; s < ns; ++s) {
      const FoliationSample& smp = td.track.samples[s];
      if (smp.t == 0.0) i0 = s;
      const Mat G = sol.metric.eval(smp.x);
      const Rank3 gam = christoffel(sol.metric, smp.x);
      for (int i = 0; i < 3; ++i) {
        Vec th(4);
        for (int mu = 0; mu < 4; ++mu) {
          double acc = smp.ju[mu][i];
          for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
              acc += gam.a[mu][a][b] * smp.jx[a][i] * smp.u[b];
          th[mu] = acc;
        }
        thetas[s][i] = th;
        for (int j = 0; j < 3; ++j) {
          double acc = 0.0;
          for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
              acc += G(mu, nu) * th[mu] * smp.jx[nu][j];
          A[s](i, j) = acc;
        }
      }
    }
    Mat dA;
    double err = 0.0;
    derivative_with_error(td.nodes, A, 1, dA, err);

    const FoliationSample& s0 = td.track.samples[i0];
    const Mat G0 = sol.metric.eval(s0.x);
    const Rank4 R = riemann(sol.metric, s0.x);
    Mat D(4);
    for (int i = 0; i < 4; ++i) {
      D(i, 0) = s0.u[i];
      for (int k = 0; k < 3; ++k) D(i, 1 + k) = s0.jx[i][k];
    }
    for (int i = 0; i < 3; ++i) {
      const Vec c = solve(D, thetas[i0][i]);
      for (int j = 0; j < 3; ++j) {
        // A^2(X_i, X_j) = g(nabla_{Theta(X_i)} d_t, X_j); the t-component of
        // Theta(X_i) contributes nothing since nabla_t d_t = 0.
        double a2 = 0.0;
        for (int k = 0; k < 3; ++k) a2 += c[1 + k] * A[i0](k, j);
        double gthth = 0.0;
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu)
            gthth += G0(mu, nu) * thetas[i0][i][mu] * thetas[i0][j][nu];
        double rterm = 0.0;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            for (int cc = 0; cc < 4; ++cc)
              for (int dd = 0; dd < 4; ++dd)
                rterm += R.a[a][b][cc][dd] * s0.u[a] * s0.jx[b][i] * s0.u[cc] *
                         s0.jx[dd][j];
        const double nabla_tA = dA(i, j) - a2 - gthth;
        rep.lemma_transversal = std::max(rep.lemma_transversal,
                                         std::fabs(nabla_tA + a2 - rterm));
      }
    }
  }
  return rep;
}

}  // namespace horizon
