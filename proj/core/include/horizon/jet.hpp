#ifndef HORIZON_JET_HPP
#define HORIZON_JET_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "horizon/errors.hpp"

namespace horizon {

inline constexpr int kMaxJetOrder = 4;
inline constexpr int kMaxJetDim = 4;
// Number of multi-indices of degree <= 4 in 4 variables: C(8,4).
inline constexpr int kMaxJetCoeffs = 70;

/// Coefficient layout shared by all jets of a given (dim, order): the list of
/// multi-indices |alpha| <= order in graded lexicographic order (sorted by
/// total degree, ties broken lexicographically with the first coordinate most
/// significant and larger exponents first), plus a precomputed table of
/// coefficient-index pairs for truncated products. The ordering is part of the
/// serialization contract and never changes.
class JetLayout {
 public:
  int dim;
  int order;
  int count;
  std::vector<std::array<std::uint8_t, kMaxJetDim>> exponents;
  std::vector<int> degree;

  struct MulEntry {
    std::uint16_t j;
    std::uint16_t k;
  };
  // mul[i] lists every (j, target) with deg(i)+deg(j) <= order.
  std::vector<std::vector<MulEntry>> mul;

  int position(const std::array<std::uint8_t, kMaxJetDim>& alpha) const;

  static const JetLayout& get(int dim, int order);

 private:
  std::vector<int> lookup_;
  JetLayout(int d, int p);
};

/// Truncated multivariate Taylor expansion of a scalar at a point: the value
/// together with all mixed partials ∂^α f / α! for |α| <= order, in the
/// JetLayout ordering. Arithmetic is exact truncated Taylor arithmetic, so a
/// product of jets is the jet of the product up to the shared order.
class Jet {
 public:
  Jet() = default;

  static Jet constant(double v, int dim, int order);
  /// Seeds coordinate number `var` at value v: coefficient 1 on the first
  /// order term of that variable.
  static Jet variable(double v, int var, int dim, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }
  int size() const { return count_; }

  double value() const { return c_[0]; }
  double coeff(int i) const { return c_[i]; }
  double& coeff(int i) { return c_[i]; }

  /// First partial with respect to coordinate i.
  double partial(int i) const;
  /// Second partial ∂²f/∂x_i∂x_j (with the factorial undone).
  double partial2(int i, int j) const;
  /// ∂^α f (Taylor coefficient times α!).
  double deriv(const std::array<int, kMaxJetDim>& alpha) const;

  const JetLayout& layout() const { return JetLayout::get(dim_, order_); }

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator+=(double s);
  Jet& operator-=(double s);
  Jet& operator*=(double s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, double b) { return a += b; }
  friend Jet operator+(double a, Jet b) { return b += a; }
  friend Jet operator-(Jet a, double b) { return a -= b; }
  friend Jet operator-(double a, const Jet& b) { return (-b) += a; }
  friend Jet operator*(Jet a, double b) { return a *= b; }
  friend Jet operator*(double a, Jet b) { return b *= a; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator/(Jet a, double b) { return a *= (1.0 / b); }
  friend Jet operator/(double a, const Jet& b);

  /// Composes a univariate Taylor series sum_k series[k] (u - u0)^k with this
  /// jet u, where series[k] = f^(k)(u0)/k!. The backbone of every elementary
  /// function on jets.
  Jet compose(const std::array<double, kMaxJetOrder + 1>& series) const;

  friend Jet sin(const Jet& u);
  friend Jet cos(const Jet& u);
  friend Jet tan(const Jet& u);
  friend Jet exp(const Jet& u);
  friend Jet log(const Jet& u);
  friend Jet sqrt(const Jet& u);
  friend Jet atan(const Jet& u);
  /// Integer power by repeated multiplication (valid for any base value).
  friend Jet pow_int(const Jet& u, long e);
  /// Real power through the binomial series; requires u.value() > 0 unless
  /// the exponent is an integer.
  friend Jet pow(const Jet& u, double e);

 private:
  int dim_ = 0;
  int order_ = 0;
  int count_ = 0;
  std::array<double, kMaxJetCoeffs> c_{};

  void check_compatible(const Jet& o) const;
};

}  // namespace horizon

#endif
