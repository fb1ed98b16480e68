#ifndef HORIZON_CATALOG_HPP
#define HORIZON_CATALOG_HPP

#include <optional>
#include <string>

#include "horizon/initial_data.hpp"

namespace horizon {

/// Horizon locus of the form {coordinate == value}.
struct HorizonLocus {
  int coord = -1;
  double value = 0.0;
};

enum class HorizonBranch { kOuter, kInner, kPlus, kMinus };

struct CatalogParams {
  double m = 1.0;
  double a = 0.5;
  double l = 1.0;
  double alpha = -2.0;
  HorizonBranch branch = HorizonBranch::kOuter;
};

/// An exact vacuum spacetime with a Killing horizon: 4-chart, Lorentzian
/// metric, horizon Killing field W (normalized so the surface gravity is
/// positive), horizon locus, and the closed-form induced initial data on the
/// horizon chart. These are the oracles every numerical path is checked
/// against.
struct SpacetimeSolution {
  std::string name;
  Chart chart;          // dimension 4
  MetricField metric;   // lorentzian
  VectorField W;
  HorizonLocus horizon;
  Chart horizon_chart;  // dimension 3, chart coords minus the locus coord
  InitialDataSet closed_form_data;
  double kappa_closed_form = 0.0;
  bool has_horizon_data = true;
  std::vector<int> vacuum_axes;  // three coordinates swept by curvature grids

  /// Inserts the locus value into a horizon-chart point.
  Vec embed(const Vec& p3) const;
  /// Pushes a horizon-chart tangent vector into the 4-chart (zero in the
  /// locus slot) and back.
  Vec tangent_to_spacetime(const Vec& v3) const;
  Vec spacetime_to_tangent(const Vec& v4) const;
  /// Chart coordinate index of horizon coordinate k.
  int tangent_axis(int k) const;

  void require_horizon_data() const;
};

/// Builds a catalog entry by name: schwarzschild | kerr | misner |
/// quotient_schwarzschild | taub_nut. Throws CatalogError on bad names or
/// parameter ranges (e.g. |a| >= m is not a non-degenerate horizon).
SpacetimeSolution build(const std::string& name, const CatalogParams& params);

const std::vector<std::string>& catalog_names();

/// Relative Ricci residual |Ric| / |Riem| at p, with an absolute fallback
/// when the full curvature vanishes (flat entries).
double ricci_residual(const SpacetimeSolution& sol, const Vec& p);

/// The closed-form induced data stated for the entry.
const InitialDataSet& induced_data_closed_form(const SpacetimeSolution& sol);

}  // namespace horizon

#endif
