#include "horizon/initial_data.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace horizon {

double killing_residual(const InitialDataSet& data, const Vec& p) {
  const Mat lie = lie_derivative_metric(data.sigma, data.V, p);
  const Mat s = data.sigma.eval(p);
  const double denom = frobenius_norm(s);
  return frobenius_norm(lie) / denom;
}

double length_residual(const InitialDataSet& data,
                       const std::vector<Vec>& pts) {
  if (pts.empty()) throw Error("length_residual: empty point list");
  double mean = 0.0;
  std::vector<double> vv(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Mat s = data.sigma.eval(pts[i]);
    const Vec v = data.V.eval(pts[i]);
    vv[i] = pair(s, v, v);
    mean += vv[i];
  }
  mean /= static_cast<double>(pts.size());
  if (!(mean > 0.0))
    throw ValidationError("sigma(V,V) not positive on the sample grid");
  double worst = 0.0;
  for (double x : vv) worst = std::max(worst, std::fabs(x - mean) / mean);
  return worst;
}

ValidationReport validate(const InitialDataSet& data,
                          const ValidationOptions& opts) {
  const std::vector<Vec> pts = data.chart.grid(opts.grid_per_axis, opts.margin);
  ValidationReport rep;
  rep.points = static_cast<int>(pts.size());

  double mean = 0.0;
  rep.min_vv = std::numeric_limits<double>::infinity();
  for (const Vec& p : pts) {
    rep.max_killing_residual =
        std::max(rep.max_killing_residual, killing_residual(data, p));
    const Mat s = data.sigma.eval(p);
    const Vec v = data.V.eval(p);
    const double vv = pair(s, v, v);
    rep.min_vv = std::min(rep.min_vv, vv);
    mean += vv;
  }
  mean /= static_cast<double>(pts.size());
  rep.sigma_vv_mean = mean;
  rep.length_residual = length_residual(data, pts);
  rep.kappa = std::sqrt(mean);
  rep.killing_ok = rep.max_killing_residual < opts.tol_killing;
  rep.length_ok = rep.length_residual < opts.tol_length;
  rep.nowhere_zero_ok = rep.min_vv > 0.0;
  return rep;
}

double surface_gravity(const InitialDataSet& data,
                       const ValidationOptions& opts) {
  const std::vector<Vec> pts = data.chart.grid(opts.grid_per_axis, opts.margin);
  const double res = length_residual(data, pts);
  if (res >= opts.tol_length)
    throw ValidationError("sigma(V,V) is not constant: residual " +
                          std::to_string(res) + " exceeds tolerance");
  double mean = 0.0;
  for (const Vec& p : pts) {
    const Mat s = data.sigma.eval(p);
    const Vec v = data.V.eval(p);
    mean += pair(s, v, v);
  }
  mean /= static_cast<double>(pts.size());
  return std::sqrt(mean);
}

Vec connection_one_form(const InitialDataSet& data, const Vec& p,
                        double kappa) {
  const Mat s = data.sigma.eval(p);
  const Vec v = data.V.eval(p);
  Vec w(data.chart.dim());
  for (int i = 0; i < w.n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < w.n; ++j) sum += s(i, j) * v[j];
    w[i] = sum / kappa;
  }
  return w;
}

OneFormField connection_one_form_field(const InitialDataSet& data,
                                       double kappa) {
  const int n = data.chart.dim();
  std::vector<Expression> comps;
  comps.reserve(n);
  const Expression inv_kappa = Expression::constant(
      1.0 / kappa, data.chart.coords, data.chart.param_names);
  for (int i = 0; i < n; ++i) {
    Expression acc =
        Expression::constant(0.0, data.chart.coords, data.chart.param_names);
    for (int j = 0; j < n; ++j) acc = acc + data.sigma.at(i, j) * data.V.at(j);
    comps.push_back(acc * inv_kappa);
  }
  return OneFormField(data.chart, std::move(comps));
}

Mat degenerate_metric(const InitialDataSet& data, const Vec& p, double kappa) {
  const Mat s = data.sigma.eval(p);
  const Vec w = connection_one_form(data, p, kappa);
  Mat g(s.n);
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j) g(i, j) = s(i, j) - w[i] * w[j];
  return g;
}

Vec lie_derivative_oneform(const OneFormField& w, const VectorField& X,
                           const Vec& p) {
  const int n = w.chart().dim();
  const std::vector<Jet> wj = w.eval_jets(p, 1);
  const std::vector<Jet> xj = X.eval_jets(p, 1);
  Vec out(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      s += xj[j].value() * wj[i].partial(j);
      s += wj[j].value() * xj[j].partial(i);
    }
    out[i] = s;
  }
  return out;
}

}  // namespace horizon
