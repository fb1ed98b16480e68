#include "horizon/curvature.hpp"

#include <cmath>

namespace horizon {

Mat metric_inverse(const Mat& g) {
  const double scale = max_abs(g);
  if (scale == 0.0) throw SingularMatrixError("metric vanishes at the point");
  double s = 1.0;
  for (int i = 0; i < g.n; ++i) s *= scale;
  if (std::fabs(det(g)) < 1e-12 * s)
    throw SingularMatrixError("metric is singular at the point");
  return invert(g);
}

namespace {

Mat value_of(const MetricJets& gj) {
  Mat g(gj.n);
  for (int i = 0; i < gj.n; ++i)
    for (int j = 0; j < gj.n; ++j) g(i, j) = gj.g[i][j].value();
  return g;
}

Rank3 christoffel_from_jets(const MetricJets& gj, const Mat& ginv) {
  const int n = gj.n;
  Rank3 gam(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
          s += ginv(k, l) * (gj.g[j][l].partial(i) + gj.g[i][l].partial(j) -
                             gj.g[i][j].partial(l));
        gam.a[k][i][j] = gam.a[k][j][i] = 0.5 * s;
      }
  return gam;
}

}  // namespace

Rank3 christoffel(const MetricField& g, const Vec& p) {
  MetricJets gj = g.eval_jets(p, 1);
  const Mat ginv = metric_inverse(value_of(gj));
  return christoffel_from_jets(gj, ginv);
}

ChristoffelDerivs christoffel_with_grad(const MetricField& g, const Vec& p) {
  const int n = g.chart().dim();
  MetricJets gj = g.eval_jets(p, 2);
  const Mat g0 = value_of(gj);
  const Mat ginv = metric_inverse(g0);

  ChristoffelDerivs out{Rank3(n), Rank4(n)};
  out.gamma = christoffel_from_jets(gj, ginv);

  // d_m g^{kl} = -g^{ka} (d_m g_{ab}) g^{bl}
  double dginv[kMaxDim][kMaxDim][kMaxDim] = {};
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        double s = 0.0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            s -= ginv(k, a) * gj.g[a][b].partial(m) * ginv(b, l);
        dginv[m][k][l] = s;
      }

  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          double s = 0.0;
          for (int l = 0; l < n; ++l) {
            s += dginv[m][k][l] * (gj.g[j][l].partial(i) +
                                   gj.g[i][l].partial(j) -
                                   gj.g[i][j].partial(l));
            s += ginv(k, l) * (gj.g[j][l].partial2(m, i) +
                               gj.g[i][l].partial2(m, j) -
                               gj.g[i][j].partial2(m, l));
          }
          out.dgamma.a[m][k][i][j] = out.dgamma.a[m][k][j][i] = 0.5 * s;
        }
  return out;
}

Rank4 riemann(const MetricField& g, const Vec& p) {
  const int n = g.chart().dim();
  const ChristoffelDerivs cd = christoffel_with_grad(g, p);
  const Mat g0 = g.eval(p);

  // R^m_{ijk} = d_i Gamma^m_{jk} - d_j Gamma^m_{ik}
  //           + Gamma^p_{jk} Gamma^m_{ip} - Gamma^p_{ik} Gamma^m_{jp}
  Rank4 upper(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          double s = cd.dgamma.a[i][m][j][k] - cd.dgamma.a[j][m][i][k];
          for (int q = 0; q < n; ++q)
            s += cd.gamma.a[q][j][k] * cd.gamma.a[m][i][q] -
                 cd.gamma.a[q][i][k] * cd.gamma.a[m][j][q];
          upper.a[i][j][k][m] = s;
        }

  Rank4 low(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int m = 0; m < n; ++m) s += g0(l, m) * upper.a[i][j][k][m];
          low.a[i][j][k][l] = s;
        }
  return low;
}

Mat ricci(const MetricField& g, const Vec& p) {
  const int n = g.chart().dim();
  const Rank4 r = riemann(g, p);
  const Mat ginv = metric_inverse(g.eval(p));
  Mat ric(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) s += ginv(i, l) * r.a[i][j][k][l];
      ric(j, k) = s;
    }
  return ric;
}

Mat cov_deriv_vector(const MetricField& g, const VectorField& X, const Vec& p) {
  const int n = g.chart().dim();
  const Rank3 gam = christoffel(g, p);
  const std::vector<Jet> xj = X.eval_jets(p, 1);
  Mat out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = xj[j].partial(i);
      for (int k = 0; k < n; ++k) s += gam.a[j][i][k] * xj[k].value();
      out(i, j) = s;
    }
  return out;
}

Mat lie_derivative_metric(const MetricField& g, const VectorField& X,
                          const Vec& p) {
  const int n = g.chart().dim();
  const MetricJets gj = g.eval_jets(p, 1);
  const std::vector<Jet> xj = X.eval_jets(p, 1);
  Mat out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        s += xj[k].value() * gj.g[i][j].partial(k);
        s += gj.g[k][j].value() * xj[k].partial(i);
        s += gj.g[i][k].value() * xj[k].partial(j);
      }
      out(i, j) = out(j, i) = s;
    }
  return out;
}

Mat exterior_derivative_oneform(const OneFormField& w, const Vec& p) {
  const int n = w.chart().dim();
  const std::vector<Jet> wj = w.eval_jets(p, 1);
  Mat out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = wj[j].partial(i) - wj[i].partial(j);
  return out;
}

Frame orthogonal_complement_basis(const MetricField& sigma, const Vec& Vp,
                                  const Vec& p) {
  const int n = sigma.chart().dim();
  const Mat s = sigma.eval(p);
  const double vv = pair(s, Vp, Vp);
  if (!(vv > 0.0))
    throw Error("orthogonal complement: V vanishes or sigma(V,V) <= 0");

  // Drop the coordinate direction most parallel to V.
  int drop = 0;
  double best = -1.0;
  for (int i = 0; i < n; ++i) {
    Vec ei(n);
    ei[i] = 1.0;
    const double sii = pair(s, ei, ei);
    if (!(sii > 0.0))
      throw Error("orthogonal complement: sigma not positive definite");
    const double score = std::fabs(pair(s, ei, Vp)) / std::sqrt(sii * vv);
    if (score > best) {
      best = score;
      drop = i;
    }
  }

  Frame fr;
  fr.base = p;
  for (int i = 0; i < n; ++i) {
    if (i == drop) continue;
    Vec e(n);
    e[i] = 1.0;
    const double cv = pair(s, e, Vp) / vv;
    for (int k = 0; k < n; ++k) e[k] -= cv * Vp[k];
    for (const Vec& prev : fr.vectors) {
      const double c = pair(s, e, prev);
      for (int k = 0; k < n; ++k) e[k] -= c * prev[k];
    }
    const double nn = pair(s, e, e);
    if (!(nn > 1e-24))
      throw Error("orthogonal complement: coordinate directions degenerate");
    const double inv = 1.0 / std::sqrt(nn);
    for (int k = 0; k < n; ++k) e[k] *= inv;
    fr.vectors.push_back(e);
  }
  return fr;
}

Frame orthogonal_complement_basis(const MetricField& sigma,
                                  const VectorField& V, const Vec& p) {
  return orthogonal_complement_basis(sigma, V.eval(p), p);
}

}  // namespace horizon
