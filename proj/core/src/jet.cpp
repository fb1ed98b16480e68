#include "horizon/jet.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

namespace horizon {

namespace {

// Packs a multi-index into a base-(kMaxJetOrder+1) key for position lookup.
int pack(const std::array<std::uint8_t, kMaxJetDim>& alpha) {
  int key = 0;
  for (int i = 0; i < kMaxJetDim; ++i) key = key * (kMaxJetOrder + 1) + alpha[i];
  return key;
}

void enumerate(int dim, int order, int slot, int remaining,
               std::array<std::uint8_t, kMaxJetDim>& cur,
               std::vector<std::array<std::uint8_t, kMaxJetDim>>& out) {
  if (slot == dim) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  // Larger exponent on the earlier coordinate first.
  for (int e = remaining; e >= 0; --e) {
    cur[slot] = static_cast<std::uint8_t>(e);
    enumerate(dim, order, slot + 1, remaining - e, cur, out);
  }
  cur[slot] = 0;
}

}  // namespace

JetLayout::JetLayout(int d, int p) : dim(d), order(p) {
  std::array<std::uint8_t, kMaxJetDim> cur{};
  for (int deg = 0; deg <= p; ++deg) enumerate(d, p, 0, deg, cur, exponents);
  count = static_cast<int>(exponents.size());
  degree.resize(count);
  int keyspace = 1;
  for (int i = 0; i < kMaxJetDim; ++i) keyspace *= (kMaxJetOrder + 1);
  lookup_.assign(keyspace, -1);
  for (int i = 0; i < count; ++i) {
    int deg = 0;
    for (int s = 0; s < kMaxJetDim; ++s) deg += exponents[i][s];
    degree[i] = deg;
    lookup_[pack(exponents[i])] = i;
  }
  mul.resize(count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (degree[i] + degree[j] > order) continue;
      std::array<std::uint8_t, kMaxJetDim> sum{};
      for (int s = 0; s < kMaxJetDim; ++s)
        sum[s] = static_cast<std::uint8_t>(exponents[i][s] + exponents[j][s]);
      mul[i].push_back({static_cast<std::uint16_t>(j),
                        static_cast<std::uint16_t>(lookup_[pack(sum)])});
    }
  }
}

int JetLayout::position(const std::array<std::uint8_t, kMaxJetDim>& alpha) const {
  const int pos = lookup_[pack(alpha)];
  if (pos < 0) throw Error("multi-index outside jet layout");
  return pos;
}

const JetLayout& JetLayout::get(int dim, int order) {
  if (dim < 1 || dim > kMaxJetDim || order < 0 || order > kMaxJetOrder)
    throw Error("jet dim must be 1..4 and order 0..4, got dim=" +
                std::to_string(dim) + " order=" + std::to_string(order));
  static const auto table = [] {
    std::array<std::unique_ptr<JetLayout>, kMaxJetDim * (kMaxJetOrder + 1)> t;
    for (int d = 1; d <= kMaxJetDim; ++d)
      for (int p = 0; p <= kMaxJetOrder; ++p)
        t[(d - 1) * (kMaxJetOrder + 1) + p].reset(new JetLayout(d, p));
    return t;
  }();
  return *table[(dim - 1) * (kMaxJetOrder + 1) + order];
}

Jet Jet::constant(double v, int dim, int order) {
  Jet j;
  j.dim_ = dim;
  j.order_ = order;
  j.count_ = JetLayout::get(dim, order).count;
  j.c_[0] = v;
  return j;
}

Jet Jet::variable(double v, int var, int dim, int order) {
  Jet j = constant(v, dim, order);
  if (var < 0 || var >= dim) throw Error("jet variable index out of range");
  if (order >= 1) {
    std::array<std::uint8_t, kMaxJetDim> alpha{};
    alpha[var] = 1;
    j.c_[j.layout().position(alpha)] = 1.0;
  }
  return j;
}

double Jet::partial(int i) const {
  if (order_ < 1) throw Error("jet order too low for a first partial");
  std::array<std::uint8_t, kMaxJetDim> alpha{};
  alpha[i] = 1;
  return c_[layout().position(alpha)];
}

double Jet::partial2(int i, int j) const {
  if (order_ < 2) throw Error("jet order too low for a second partial");
  std::array<std::uint8_t, kMaxJetDim> alpha{};
  alpha[i] += 1;
  alpha[j] += 1;
  const double coeff = c_[layout().position(alpha)];
  return (i == j) ? 2.0 * coeff : coeff;
}

double Jet::deriv(const std::array<int, kMaxJetDim>& alpha) const {
  std::array<std::uint8_t, kMaxJetDim> a{};
  double fact = 1.0;
  for (int i = 0; i < kMaxJetDim; ++i) {
    a[i] = static_cast<std::uint8_t>(alpha[i]);
    for (int k = 2; k <= alpha[i]; ++k) fact *= k;
  }
  return c_[layout().position(a)] * fact;
}

void Jet::check_compatible(const Jet& o) const {
  if (dim_ != o.dim_ || order_ != o.order_)
    throw Error("jet dim/order mismatch in arithmetic");
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (int i = 0; i < count_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  check_compatible(o);
  for (int i = 0; i < count_; ++i) c_[i] += o.c_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  check_compatible(o);
  for (int i = 0; i < count_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Jet& Jet::operator+=(double s) {
  c_[0] += s;
  return *this;
}

Jet& Jet::operator-=(double s) {
  c_[0] -= s;
  return *this;
}

Jet& Jet::operator*=(double s) {
  for (int i = 0; i < count_; ++i) c_[i] *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.check_compatible(b);
  const JetLayout& lay = a.layout();
  Jet r = Jet::constant(0.0, a.dim_, a.order_);
  for (int i = 0; i < a.count_; ++i) {
    const double ai = a.c_[i];
    if (ai == 0.0) continue;
    for (const auto& e : lay.mul[i]) r.c_[e.k] += ai * b.c_[e.j];
  }
  return r;
}

Jet Jet::compose(const std::array<double, kMaxJetOrder + 1>& series) const {
  // Horner evaluation in (u - u0), which has no constant term, so powers
  // beyond `order` vanish under truncation.
  Jet h = *this;
  h.c_[0] = 0.0;
  Jet r = Jet::constant(series[order_], dim_, order_);
  for (int k = order_ - 1; k >= 0; --k) {
    r = r * h;
    r += series[k];
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  a.check_compatible(b);
  const double b0 = b.value();
  if (b0 == 0.0) throw DomainError("division by zero");
  std::array<double, kMaxJetOrder + 1> inv{};
  double p = 1.0 / b0;
  for (int k = 0; k <= b.order(); ++k) {
    inv[k] = (k % 2 == 0 ? p : -p);
    p /= b0;
  }
  return a * b.compose(inv);
}

Jet operator/(double a, const Jet& b) {
  return Jet::constant(a, b.dim(), b.order()) / b;
}

Jet sin(const Jet& u) {
  const double x = u.value();
  std::array<double, kMaxJetOrder + 1> s{};
  double fact = 1.0;
  for (int k = 0; k <= u.order(); ++k) {
    if (k > 1) fact *= k;
    s[k] = std::sin(x + k * 1.5707963267948966) / fact;
  }
  return u.compose(s);
}

Jet cos(const Jet& u) {
  const double x = u.value();
  std::array<double, kMaxJetOrder + 1> s{};
  double fact = 1.0;
  for (int k = 0; k <= u.order(); ++k) {
    if (k > 1) fact *= k;
    s[k] = std::cos(x + k * 1.5707963267948966) / fact;
  }
  return u.compose(s);
}

Jet tan(const Jet& u) {
  if (std::cos(u.value()) == 0.0) throw DomainError("tan at a pole");
  return sin(u) / cos(u);
}

Jet exp(const Jet& u) {
  const double e0 = std::exp(u.value());
  std::array<double, kMaxJetOrder + 1> s{};
  double fact = 1.0;
  for (int k = 0; k <= u.order(); ++k) {
    if (k > 1) fact *= k;
    s[k] = e0 / fact;
  }
  return u.compose(s);
}

Jet log(const Jet& u) {
  const double x = u.value();
  if (x <= 0.0) throw DomainError("log of a non-positive value");
  std::array<double, kMaxJetOrder + 1> s{};
  s[0] = std::log(x);
  double p = 1.0;
  for (int k = 1; k <= u.order(); ++k) {
    p /= x;
    s[k] = (k % 2 == 1 ? p : -p) / k;
  }
  return u.compose(s);
}

Jet pow_int(const Jet& u, long e) {
  if (e < 0) {
    if (u.value() == 0.0) throw DomainError("negative power of zero");
    return 1.0 / pow_int(u, -e);
  }
  Jet r = Jet::constant(1.0, u.dim(), u.order());
  Jet base = u;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Jet pow(const Jet& u, double e) {
  if (e == std::floor(e) && std::fabs(e) <= 64.0)
    return pow_int(u, static_cast<long>(e));
  const double x = u.value();
  if (x <= 0.0)
    throw DomainError("non-integer power of a non-positive value");
  std::array<double, kMaxJetOrder + 1> s{};
  double coeff = 1.0;
  for (int k = 0; k <= u.order(); ++k) {
    if (k > 0) coeff *= (e - (k - 1)) / k;
    s[k] = coeff * std::pow(x, e - k);
  }
  return u.compose(s);
}

Jet sqrt(const Jet& u) {
  if (u.value() <= 0.0) throw DomainError("sqrt of a non-positive value");
  return pow(u, 0.5);
}

Jet atan(const Jet& u) {
  const double x = u.value();
  const double s1 = 1.0 + x * x;
  // Taylor coefficients of atan at x, i.e. f^(k)(x)/k! for k <= 4.
  std::array<double, kMaxJetOrder + 1> s{};
  s[0] = std::atan(x);
  if (u.order() >= 1) s[1] = 1.0 / s1;
  if (u.order() >= 2) s[2] = -x / (s1 * s1);
  if (u.order() >= 3) s[3] = (3.0 * x * x - 1.0) / (3.0 * s1 * s1 * s1);
  if (u.order() >= 4) s[4] = x * (1.0 - x * x) / (s1 * s1 * s1 * s1);
  return u.compose(s);
}

}  // namespace horizon
