#include "horizon/catalog.hpp"

#include <cmath>

#include "horizon/curvature.hpp"

namespace horizon {

Vec SpacetimeSolution::embed(const Vec& p3) const {
  Vec p4(4);
  int k = 0;
  for (int i = 0; i < 4; ++i)
    p4[i] = (i == horizon.coord) ? horizon.value : p3[k++];
  return p4;
}

Vec SpacetimeSolution::tangent_to_spacetime(const Vec& v3) const {
  Vec v4(4);
  int k = 0;
  for (int i = 0; i < 4; ++i) v4[i] = (i == horizon.coord) ? 0.0 : v3[k++];
  return v4;
}

Vec SpacetimeSolution::spacetime_to_tangent(const Vec& v4) const {
  Vec v3(3);
  int k = 0;
  for (int i = 0; i < 4; ++i)
    if (i != horizon.coord) v3[k++] = v4[i];
  return v3;
}

int SpacetimeSolution::tangent_axis(int k) const {
  return (k < horizon.coord) ? k : k + 1;
}

void SpacetimeSolution::require_horizon_data() const {
  if (!has_horizon_data)
    throw CatalogError("catalog entry '" + name +
                       "' carries no tagged horizon for these parameters");
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

Expression parse_on(const Chart& c, const std::string& src) {
  return Expression::parse(src, c.coords, c.param_names);
}

MetricField metric_from_upper(const Chart& c, Signature sig,
                              std::vector<std::vector<std::string>> upper) {
  const int n = c.dim();
  std::vector<std::vector<Expression>> m(n, std::vector<Expression>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m[i][j] = parse_on(c, upper[i][j - i]);
      m[j][i] = m[i][j];
    }
  return MetricField(c, sig, std::move(m));
}

SpacetimeSolution build_schwarzschild(const CatalogParams& p) {
  if (!(p.m > 0.0)) throw CatalogError("schwarzschild: m must be positive");
  const double m = p.m;

  Chart c4{{"r", "v", "theta", "phi"},
           {0.5 * m, -2.0, 0.05, 0.1},
           {5.0 * m, 2.0, M_PI - 0.05, 2.0 * M_PI - 0.1},
           {"m"},
           {m}};
  MetricField g = metric_from_upper(
      c4, Signature::kLorentzian,
      {{"0", "1", "0", "0"},
       {"2*m/r - 1", "0", "0"},
       {"r^2", "0"},
       {"r^2*sin(theta)^2"}});
  VectorField W = VectorField::from_strings(c4, {"0", "1", "0", "0"});

  Chart c3{{"v", "theta", "phi"},
           {-2.0, 0.05, 0.1},
           {2.0, M_PI - 0.05, 2.0 * M_PI - 0.1},
           {"m"},
           {m}};
  MetricField sigma = metric_from_upper(
      c3, Signature::kRiemannian,
      {{"1/(16*m^2)", "0", "0"}, {"4*m^2", "0"}, {"4*m^2*sin(theta)^2"}});
  VectorField V = VectorField::from_strings(c3, {"1", "0", "0"});

  SpacetimeSolution sol{"schwarzschild",
                        c4,
                        std::move(g),
                        std::move(W),
                        HorizonLocus{0, 2.0 * m},
                        c3,
                        InitialDataSet{c3, std::move(sigma), std::move(V),
                                       "schwarzschild induced data"},
                        1.0 / (4.0 * m),
                        true,
                        {0, 2, 3}};
  return sol;
}

SpacetimeSolution build_kerr(const CatalogParams& p) {
  if (!(p.m > 0.0)) throw CatalogError("kerr: m must be positive");
  if (!(std::fabs(p.a) > 0.0) || !(std::fabs(p.a) < p.m))
    throw CatalogError(
        "kerr: need 0 < |a| < m (|a| >= m has no non-degenerate horizon; a = "
        "0 is schwarzschild)");
  const double m = p.m, a = p.a;
  const bool outer = (p.branch == HorizonBranch::kOuter ||
                      p.branch == HorizonBranch::kPlus);
  const double rh = m + (outer ? 1.0 : -1.0) * std::sqrt(m * m - a * a);
  // Signed surface gravity of the stated Killing field; negative on the
  // inner branch, where W is flipped to keep kappa positive.
  const double kap = 0.5 * (1.0 / m - 1.0 / rh);
  const double sgn = (kap >= 0.0) ? 1.0 : -1.0;

  const std::vector<std::string> pn{"m", "a", "rh", "kap"};
  const std::vector<double> pv{m, a, rh, kap};

  Chart c4{{"r", "v", "theta", "phi"},
           {0.45 * rh, -2.0, 0.05, 0.1},
           {2.6 * rh, 2.0, M_PI - 0.05, 2.0 * M_PI - 0.1},
           pn,
           pv};
  const std::string rho2 = "(r^2 + a^2*cos(theta)^2)";
  MetricField g = metric_from_upper(
      c4, Signature::kLorentzian,
      {{"0", "1", "0", "-a*sin(theta)^2"},
       {"2*m*r/" + rho2 + " - 1", "0", "-2*m*r*a*sin(theta)^2/" + rho2},
       {rho2, "0"},
       {"a^2*sin(theta)^4*(1 + 2*m*r/" + rho2 + ") + " + rho2 +
        "*sin(theta)^2"}});
  const std::string sv = outer ? "1" : "-1";
  VectorField W = VectorField::from_strings(
      c4, {"0", sv, "0", sv + "*a/(rh^2 + a^2)"});

  Chart c3{{"v", "theta", "phi"},
           {-2.0, 0.05, 0.1},
           {2.0, M_PI - 0.05, 2.0 * M_PI - 0.1},
           pn,
           pv};
  // Induced lightlike metric and connection one-form in closed form; sigma is
  // assembled as g|_H + omega (x) omega.
  const std::string rhoh = "(rh^2 + a^2*cos(theta)^2)";
  const Expression gh_vv = parse_on(c3, "sin(theta)^2*a^2/" + rhoh);
  const Expression gh_vp =
      parse_on(c3, "-sin(theta)^2*a*(rh^2 + a^2)/" + rhoh);
  const Expression gh_pp =
      parse_on(c3, "sin(theta)^2*(rh^2 + a^2)^2/" + rhoh);
  const Expression gh_tt = parse_on(c3, rhoh);
  const Expression zero = Expression::constant(0.0, c3.coords, c3.param_names);

  const Expression w_v = parse_on(
      c3, "kap*(rh^2 + a^2)/" + rhoh + " + rh*a^2*sin(theta)^2/" + rhoh + "^2");
  const Expression w_t =
      parse_on(c3, "-(1/2)*a^2*sin(2*theta)/" + rhoh);
  const Expression w_p = parse_on(
      c3, "-kap*(rh^2 + a^2)*a*sin(theta)^2/" + rhoh +
              " - rh*a*sin(theta)^2*(rh^2 + a^2)/" + rhoh + "^2");

  std::vector<std::vector<Expression>> s(3, std::vector<Expression>(3));
  s[0][0] = gh_vv + w_v * w_v;
  s[0][1] = s[1][0] = zero + w_v * w_t;  // g|_H has no v-theta term
  s[0][2] = s[2][0] = gh_vp + w_v * w_p;
  s[1][1] = gh_tt + w_t * w_t;
  s[1][2] = s[2][1] = zero + w_t * w_p;
  s[2][2] = gh_pp + w_p * w_p;
  MetricField sigma(c3, Signature::kRiemannian, std::move(s));
  VectorField V =
      VectorField::from_strings(c3, {sv, "0", sv + "*a/(rh^2 + a^2)"});

  SpacetimeSolution sol{"kerr",
                        c4,
                        std::move(g),
                        std::move(W),
                        HorizonLocus{0, rh},
                        c3,
                        InitialDataSet{c3, std::move(sigma), std::move(V),
                                       "kerr induced data"},
                        std::fabs(kap),
                        true,
                        {0, 2, 3}};
  sol.name = outer ? "kerr" : "kerr_inner";
  return sol;
}

SpacetimeSolution build_misner(const CatalogParams& p) {
  if (p.alpha == 0.0) throw CatalogError("misner: alpha must be non-zero");
  const double alpha = p.alpha;

  Chart c4{{"t", "x", "y", "z"},
           {-0.8, -1.0, -1.0, -1.0},
           {0.8, 1.0, 1.0, 1.0},
           {"alpha"},
           {alpha}};
  MetricField g = metric_from_upper(c4, Signature::kLorentzian,
                                    {{"0", "1", "0", "0"},
                                     {"alpha*t", "0", "0"},
                                     {"1", "0"},
                                     {"1"}});
  VectorField W = VectorField::from_strings(c4, {"0", "1", "0", "0"});

  Chart c3{{"x", "y", "z"},
           {-1.0, -1.0, -1.0},
           {1.0, 1.0, 1.0},
           {"alpha"},
           {alpha}};
  MetricField sigma = metric_from_upper(
      c3, Signature::kRiemannian, {{"alpha^2/4", "0", "0"}, {"1", "0"}, {"1"}});
  VectorField V = VectorField::from_strings(c3, {"1", "0", "0"});

  SpacetimeSolution sol{"misner",
                        c4,
                        std::move(g),
                        std::move(W),
                        HorizonLocus{0, 0.0},
                        c3,
                        InitialDataSet{c3, std::move(sigma), std::move(V),
                                       "misner induced data"},
                        -alpha / 2.0,
                        alpha == -2.0,
                        {0, 2, 3}};
  return sol;
}

SpacetimeSolution build_quotient_schwarzschild(const CatalogParams& p) {
  if (!(p.m > 0.0))
    throw CatalogError("quotient_schwarzschild: m must be positive");
  const double m = p.m;

  Chart c4{{"r", "w", "theta", "phi"},
           {0.5 * m, -2.0, 0.05, 0.1},
           {5.0 * m, 2.0, M_PI - 0.05, 2.0 * M_PI - 0.1},
           {"m"},
           {m}};
  MetricField g = metric_from_upper(
      c4, Signature::kLorentzian,
      {{"0", "2", "0", "0"},
       {"4*(2*m/r - 1)", "0", "0"},
       {"r^2", "0"},
       {"r^2*sin(theta)^2"}});
  VectorField W = VectorField::from_strings(c4, {"0", "1", "0", "0"});

  Chart c3{{"w", "theta", "phi"},
           {-2.0, 0.05, 0.1},
           {2.0, M_PI - 0.05, 2.0 * M_PI - 0.1},
           {"m"},
           {m}};
  MetricField sigma = metric_from_upper(
      c3, Signature::kRiemannian,
      {{"1/(4*m^2)", "0", "0"}, {"4*m^2", "0"}, {"4*m^2*sin(theta)^2"}});
  VectorField V = VectorField::from_strings(c3, {"1", "0", "0"});

  SpacetimeSolution sol{"quotient_schwarzschild",
                        c4,
                        std::move(g),
                        std::move(W),
                        HorizonLocus{0, 2.0 * m},
                        c3,
                        InitialDataSet{c3, std::move(sigma), std::move(V),
                                       "quotient schwarzschild induced data"},
                        1.0 / (2.0 * m),
                        true,
                        {0, 2, 3}};
  return sol;
}

SpacetimeSolution build_taub_nut(const CatalogParams& p) {
  if (p.l == 0.0) throw CatalogError("taub_nut: l must be non-zero");
  const double m = p.m, l = p.l;
  const bool plus = (p.branch == HorizonBranch::kPlus ||
                     p.branch == HorizonBranch::kOuter);
  const double root = std::sqrt(m * m + l * l);
  const double tp = m + root, tm = m - root;
  const double th = plus ? tp : tm;
  // Signed surface gravity of E1 at the chosen horizon.
  const double kap = (plus ? 2.0 : -2.0) * l * root / (th * th + l * l);

  const std::vector<std::string> pn{"m", "l", "tp", "tm", "th", "kap"};
  const std::vector<double> pv{m, l, tp, tm, th, kap};

  const double pad = 0.6 * root;
  Chart c4{{"t", "psi", "theta", "phi"},
           {tm - pad, 0.1, 0.1, 0.1},
           {tp + pad, 6.1, M_PI - 0.1, 2.0 * M_PI - 0.1},
           pn,
           pv};
  // Left-invariant coframe in Euler angles: alpha_1 = dpsi + cos(theta) dphi,
  // alpha_2/alpha_3 the rotated (theta, phi) legs, so E_1 = d_psi. Checked
  // against the vacuum property of the assembled 4-metric.
  const std::string U = "(((tp - t)*(t - tm))/(t^2 + l^2))";
  MetricField g = metric_from_upper(
      c4, Signature::kLorentzian,
      {{"0", "2*l", "0", "2*l*cos(theta)"},
       {"4*l^2*" + U, "0", "4*l^2*" + U + "*cos(theta)"},
       {"t^2 + l^2", "0"},
       {"4*l^2*" + U + "*cos(theta)^2 + (t^2 + l^2)*sin(theta)^2"}});
  VectorField W = VectorField::from_strings(
      c4, {"0", (kap >= 0.0) ? "1" : "-1", "0", "0"});

  Chart c3{{"psi", "theta", "phi"},
           {0.1, 0.1, 0.1},
           {6.1, M_PI - 0.1, 2.0 * M_PI - 0.1},
           pn,
           pv};
  MetricField sigma = metric_from_upper(
      c3, Signature::kRiemannian,
      {{"kap^2", "0", "kap^2*cos(theta)"},
       {"th^2 + l^2", "0"},
       {"kap^2*cos(theta)^2 + (th^2 + l^2)*sin(theta)^2"}});
  VectorField V = VectorField::from_strings(
      c3, {(kap >= 0.0) ? "1" : "-1", "0", "0"});

  SpacetimeSolution sol{"taub_nut",
                        c4,
                        std::move(g),
                        std::move(W),
                        HorizonLocus{0, th},
                        c3,
                        InitialDataSet{c3, std::move(sigma), std::move(V),
                                       "taub-nut induced data"},
                        std::fabs(kap),
                        true,
                        {0, 2, 3}};
  return sol;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "schwarzschild", "kerr", "misner", "quotient_schwarzschild", "taub_nut"};
  return names;
}

SpacetimeSolution build(const std::string& name, const CatalogParams& params) {
  if (name == "schwarzschild") return build_schwarzschild(params);
  if (name == "kerr") return build_kerr(params);
  if (name == "misner") return build_misner(params);
  if (name == "quotient_schwarzschild")
    return build_quotient_schwarzschild(params);
  if (name == "taub_nut") return build_taub_nut(params);
  throw CatalogError("unknown catalog entry '" + name + "'");
}

double ricci_residual(const SpacetimeSolution& sol, const Vec& p) {
  const Rank4 riem = riemann(sol.metric, p);
  const Mat ric = ricci(sol.metric, p);
  double riem_norm = 0.0;
  const int n = riem.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          riem_norm += riem.a[i][j][k][l] * riem.a[i][j][k][l];
  riem_norm = std::sqrt(riem_norm);
  // Absolute fallback for flat entries.
  return frobenius_norm(ric) / std::max(riem_norm, 1.0);
}

const InitialDataSet& induced_data_closed_form(const SpacetimeSolution& sol) {
  sol.require_horizon_data();
  return sol.closed_form_data;
}

}  // namespace horizon
