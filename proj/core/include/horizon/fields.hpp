#ifndef HORIZON_FIELDS_HPP
#define HORIZON_FIELDS_HPP

#include <vector>

#include "horizon/chart.hpp"
#include "horizon/expression.hpp"
#include "horizon/linalg.hpp"

namespace horizon {

enum class Signature { kRiemannian, kLorentzian };

/// Jets of all metric components at a point, symmetric in (i, j).
struct MetricJets {
  int n = 0;
  Jet g[kMaxDim][kMaxDim];
};

/// A metric given as a symmetric matrix of expressions over a chart. The
/// matrix is stored in full; symmetry is enforced at construction. Degenerate
/// metrics (e.g. the lightlike metric induced on a horizon) may be
/// represented, but every operation needing the inverse rejects them.
class MetricField {
 public:
  MetricField() = default;
  MetricField(Chart chart, Signature sig,
              std::vector<std::vector<Expression>> components);

  /// Parses an upper-triangular (or full) matrix of component strings.
  static MetricField from_strings(Chart chart, Signature sig,
                                  const std::vector<std::vector<std::string>>& comps);

  const Chart& chart() const { return chart_; }
  Signature signature() const { return signature_; }
  const Expression& at(int i, int j) const { return comps_[i][j]; }

  Mat eval(const Vec& p) const;
  MetricJets eval_jets(const Vec& p, int order) const;
  /// Jets seeded on a custom subset of coordinates (see Expression).
  MetricJets eval_jets_seeded(const Vec& p, int order, int jet_dim,
                              std::span<const int> coord_slots) const;

 private:
  Chart chart_;
  Signature signature_ = Signature::kRiemannian;
  std::vector<std::vector<Expression>> comps_;
};

class VectorField {
 public:
  VectorField() = default;
  VectorField(Chart chart, std::vector<Expression> components);
  static VectorField from_strings(Chart chart,
                                  const std::vector<std::string>& comps);

  const Chart& chart() const { return chart_; }
  const Expression& at(int i) const { return comps_[i]; }

  Vec eval(const Vec& p) const;
  std::vector<Jet> eval_jets(const Vec& p, int order) const;

 private:
  Chart chart_;
  std::vector<Expression> comps_;
};

class OneFormField {
 public:
  OneFormField() = default;
  OneFormField(Chart chart, std::vector<Expression> components);

  const Chart& chart() const { return chart_; }
  const Expression& at(int i) const { return comps_[i]; }

  Vec eval(const Vec& p) const;
  std::vector<Jet> eval_jets(const Vec& p, int order) const;

 private:
  Chart chart_;
  std::vector<Expression> comps_;
};

/// An ordered set of vectors anchored at a point, e.g. an orthonormal basis
/// of the orthogonal complement of a Killing field.
struct Frame {
  Vec base;
  std::vector<Vec> vectors;
};

}  // namespace horizon

#endif
