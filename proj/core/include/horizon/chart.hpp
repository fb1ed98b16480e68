#ifndef HORIZON_CHART_HPP
#define HORIZON_CHART_HPP

#include <string>
#include <vector>

#include "horizon/errors.hpp"
#include "horizon/linalg.hpp"

namespace horizon {

/// A single coordinate chart: ordered coordinate names with an open box
/// domain, plus named real parameters with values. Sample grids used for
/// validation and residual sweeps stay strictly inside the box.
struct Chart {
  std::vector<std::string> coords;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<std::string> param_names;
  std::vector<double> param_values;

  int dim() const { return static_cast<int>(coords.size()); }

  int coord_index(const std::string& name) const;
  double param(const std::string& name) const;

  bool contains(const Vec& p) const;

  /// Uniform grid with `per_axis` points per coordinate, inset from the box
  /// edges by the fraction `margin` of the box width.
  std::vector<Vec> grid(int per_axis, double margin = 0.0) const;

  /// Grid varying only the listed coordinates; the others sit at the box
  /// midpoint.
  std::vector<Vec> grid_on(const std::vector<int>& axes, int per_axis,
                           double margin = 0.0) const;

  void check_valid() const;
};

}  // namespace horizon

#endif
