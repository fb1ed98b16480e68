#include "horizon/fields.hpp"

namespace horizon {

MetricField::MetricField(Chart chart, Signature sig,
                         std::vector<std::vector<Expression>> components)
    : chart_(std::move(chart)), signature_(sig), comps_(std::move(components)) {
  const int n = chart_.dim();
  if (static_cast<int>(comps_.size()) != n)
    throw Error("metric component matrix has wrong dimension");
  for (const auto& row : comps_)
    if (static_cast<int>(row.size()) != n)
      throw Error("metric component matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!comps_[i][j].structurally_equal(comps_[j][i]))
        throw Error("metric components not symmetric at (" +
                    chart_.coords[i] + "," + chart_.coords[j] + ")");
}

MetricField MetricField::from_strings(
    Chart chart, Signature sig,
    const std::vector<std::vector<std::string>>& comps) {
  const int n = chart.dim();
  std::vector<std::vector<Expression>> m(n, std::vector<Expression>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::string* src = nullptr;
      if (i < static_cast<int>(comps.size()) &&
          j < static_cast<int>(comps[i].size()) && !comps[i][j].empty())
        src = &comps[i][j];
      else if (j < static_cast<int>(comps.size()) &&
               i < static_cast<int>(comps[j].size()) && !comps[j][i].empty())
        src = &comps[j][i];
      if (!src) throw Error("missing metric component");
      m[i][j] = Expression::parse(*src, chart.coords, chart.param_names);
    }
  return MetricField(std::move(chart), sig, std::move(m));
}

Mat MetricField::eval(const Vec& p) const {
  const int n = chart_.dim();
  Mat g(n);
  std::span<const double> pt(p.a.data(), n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      g(i, j) = g(j, i) = comps_[i][j].eval(pt, chart_.param_values);
  return g;
}

MetricJets MetricField::eval_jets(const Vec& p, int order) const {
  const int n = chart_.dim();
  MetricJets out;
  out.n = n;
  std::span<const double> pt(p.a.data(), n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      out.g[i][j] = comps_[i][j].eval_jet(pt, chart_.param_values, order);
      if (i != j) out.g[j][i] = out.g[i][j];
    }
  return out;
}

MetricJets MetricField::eval_jets_seeded(const Vec& p, int order, int jet_dim,
                                         std::span<const int> coord_slots) const {
  const int n = chart_.dim();
  MetricJets out;
  out.n = n;
  std::span<const double> pt(p.a.data(), n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      out.g[i][j] = comps_[i][j].eval_jet_seeded(pt, chart_.param_values, order,
                                                 jet_dim, coord_slots);
      if (i != j) out.g[j][i] = out.g[i][j];
    }
  return out;
}

VectorField::VectorField(Chart chart, std::vector<Expression> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != chart_.dim())
    throw Error("vector field component count != chart dimension");
}

VectorField VectorField::from_strings(Chart chart,
                                      const std::vector<std::string>& comps) {
  std::vector<Expression> c;
  c.reserve(comps.size());
  for (const std::string& s : comps)
    c.push_back(Expression::parse(s, chart.coords, chart.param_names));
  return VectorField(std::move(chart), std::move(c));
}

Vec VectorField::eval(const Vec& p) const {
  const int n = chart_.dim();
  Vec v(n);
  std::span<const double> pt(p.a.data(), n);
  for (int i = 0; i < n; ++i) v[i] = comps_[i].eval(pt, chart_.param_values);
  return v;
}

std::vector<Jet> VectorField::eval_jets(const Vec& p, int order) const {
  const int n = chart_.dim();
  std::vector<Jet> out(n);
  std::span<const double> pt(p.a.data(), n);
  for (int i = 0; i < n; ++i)
    out[i] = comps_[i].eval_jet(pt, chart_.param_values, order);
  return out;
}

OneFormField::OneFormField(Chart chart, std::vector<Expression> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != chart_.dim())
    throw Error("one-form component count != chart dimension");
}

Vec OneFormField::eval(const Vec& p) const {
  const int n = chart_.dim();
  Vec v(n);
  std::span<const double> pt(p.a.data(), n);
  for (int i = 0; i < n; ++i) v[i] = comps_[i].eval(pt, chart_.param_values);
  return v;
}

std::vector<Jet> OneFormField::eval_jets(const Vec& p, int order) const {
  const int n = chart_.dim();
  std::vector<Jet> out(n);
  std::span<const double> pt(p.a.data(), n);
  for (int i = 0; i < n; ++i)
    out[i] = comps_[i].eval_jet(pt, chart_.param_values, order);
  return out;
}

}  // namespace horizon
