#include "horizon/chart.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace horizon {

int Chart::coord_index(const std::string& name) const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == name) return static_cast<int>(i);
  throw Error("unknown coordinate '" + name + "'");
}

double Chart::param(const std::string& name) const {
  for (std::size_t i = 0; i < param_names.size(); ++i)
    if (param_names[i] == name) return param_values[i];
  throw Error("unknown parameter '" + name + "'");
}

bool Chart::contains(const Vec& p) const {
  for (int i = 0; i < dim(); ++i)
    if (!(p[i] > lower[i] && p[i] < upper[i])) return false;
  return true;
}

std::vector<Vec> Chart::grid(int per_axis, double margin) const {
  std::vector<int> axes(dim());
  for (int i = 0; i < dim(); ++i) axes[i] = i;
  return grid_on(axes, per_axis, margin);
}

std::vector<Vec> Chart::grid_on(const std::vector<int>& axes, int per_axis,
                                double margin) const {
  check_valid();
  if (per_axis < 1) throw Error("grid needs at least one point per axis");
  const int n = dim();
  Vec mid(n);
  for (int i = 0; i < n; ++i) mid[i] = 0.5 * (lower[i] + upper[i]);

  std::vector<Vec> out;
  std::vector<int> idx(axes.size(), 0);
  const std::size_t total = [&] {
    std::size_t t = 1;
    for (std::size_t k = 0; k < axes.size(); ++k) t *= per_axis;
    return t;
  }();
  out.reserve(total);
  for (std::size_t count = 0; count < total; ++count) {
    Vec p = mid;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      const int ax = axes[k];
      const double lo = lower[ax] + margin * (upper[ax] - lower[ax]);
      const double hi = upper[ax] - margin * (upper[ax] - lower[ax]);
      p[ax] = (per_axis == 1)
                  ? 0.5 * (lo + hi)
                  : lo + (hi - lo) * idx[k] / double(per_axis - 1);
    }
    out.push_back(p);
    for (std::size_t k = 0; k < axes.size(); ++k) {
      if (++idx[k] < per_axis) break;
      idx[k] = 0;
    }
  }
  return out;
}

void Chart::check_valid() const {
  if (coords.empty() || coords.size() != lower.size() ||
      coords.size() != upper.size())
    throw Error("chart coordinate/bound lists inconsistent");
  if (param_names.size() != param_values.size())
    throw Error("chart parameter lists inconsistent");
  std::set<std::string> names(coords.begin(), coords.end());
  if (names.size() != coords.size())
    throw Error("chart coordinate names must be unique");
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!(lower[i] < upper[i]))
      throw Error("chart box empty in coordinate '" + coords[i] + "'");
}

}  // namespace horizon
