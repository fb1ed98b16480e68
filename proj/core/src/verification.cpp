#include "horizon/verification.hpp"

#include <chrono>
#include <cstdlib>
#include <limits>
#include <cmath>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "horizon/curvature.hpp"
#include "horizon/expansion.hpp"
#include "horizon/numerics.hpp"

namespace horizon {

namespace {

CheckResult make_check(std::string id, std::string detail, double residual,
                       double threshold) {
  CheckResult c;
  c.id = std::move(id);
  c.detail = std::move(detail);
  c.residual = residual;
  c.threshold = threshold;
  c.pass = std::isfinite(residual) && residual < threshold;
  return c;
}

CheckResult make_range_check(std::string id, std::string detail, double value,
                             double lo, double hi, bool degenerate_pass) {
  CheckResult c;
  c.id = std::move(id);
  c.detail = std::move(detail);
  c.residual = value;
  c.threshold = hi;
  c.pass = degenerate_pass || (std::isfinite(value) && value >= lo && value <= hi);
  return c;
}

struct EntryCase {
  std::string name;
  CatalogParams params;
};

std::vector<EntryCase> entry_cases(const VerifyOptions& opts) {
  std::vector<EntryCase> all;
  {
    EntryCase s;
    s.name = "schwarzschild";
    s.params.m = 1.0;
    all.push_back(s);
  }
  {
    EntryCase s;
    s.name = "kerr";
    s.params.m = 1.0;
    s.params.a = 0.5;
    s.params.branch = HorizonBranch::kOuter;
    all.push_back(s);
  }
  {
    EntryCase s;
    s.name = "misner";
    s.params.alpha = -2.0;
    all.push_back(s);
  }
  {
    EntryCase s;
    s.name = "quotient_schwarzschild";
    s.params.m = 0.5;
    all.push_back(s);
  }
  {
    EntryCase s;
    s.name = "taub_nut";
    s.params.m = 0.0;
    s.params.l = 1.0 / std::sqrt(2.0);
    s.params.branch = HorizonBranch::kPlus;
    all.push_back(s);
  }
  if (opts.entries.empty()) return all;
  std::vector<EntryCase> picked;
  for (const std::string& want : opts.entries) {
    bool found = false;
    for (const EntryCase& s : all)
      if (s.name == want) {
        picked.push_back(s);
        found = true;
      }
    if (!found) throw CatalogError("unknown catalog entry '" + want + "'");
  }
  return picked;
}

std::vector<Vec> base_grid(const SpacetimeSolution& sol, int n) {
  // A one-dimensional sweep across the middle horizon coordinate (theta for
  // the sphere-based entries, the second torus/Euler coordinate otherwise).
  return sol.horizon_chart.grid_on({1}, n, 0.05);
}

// --------------------------------------------------------------------------
// Criterion 1: surface gravity reproduction, closed form and induced paths.

void check_kappa(const VerifyOptions& o, std::vector<CheckResult>& out) {
  struct Row {
    std::string id;
    std::string name;
    CatalogParams p;
    double expect;
    double tol;
  };
  const double s2 = 1.0 / std::sqrt(2.0);
  std::vector<Row> rows;
  for (double m : {0.5, 1.0, 2.0}) {
    Row r{"1.schwarzschild.kappa.m=" + std::to_string(m).substr(0, 3),
          "schwarzschild", CatalogParams{}, 1.0 / (4.0 * m), o.tol.kappa_exact};
    r.p.m = m;
    rows.push_back(r);
  }
  {
    Row r{"1.kerr.kappa", "kerr", CatalogParams{}, 0.2320508076,
          o.tol.kappa_formula};
    r.p.m = 1.0;
    r.p.a = 0.5;
    r.p.branch = HorizonBranch::kOuter;
    rows.push_back(r);
  }
  {
    Row r{"1.taub_nut.kappa", "taub_nut", CatalogParams{}, 1.0,
          o.tol.kappa_formula};
    r.p.m = 0.0;
    r.p.l = s2;
    r.p.branch = HorizonBranch::kPlus;
    rows.push_back(r);
  }
  {
    Row r{"1.quotient_schwarzschild.kappa", "quotient_schwarzschild",
          CatalogParams{}, 1.0, o.tol.kappa_exact};
    r.p.m = 0.5;
    rows.push_back(r);
  }

  for (const Row& r : rows) {
    const SpacetimeSolution sol = build(r.name, r.p);
    ValidationOptions vo;
    vo.grid_per_axis = 5;
    const double k_data = surface_gravity(sol.closed_form_data, vo);
    const InducedData ind = induce_numeric(sol, base_grid(sol, 5));
    const double dev_data = std::fabs(k_data - r.expect);
    const double dev_num = std::fabs(ind.kappa - r.expect);
    const double dev_paths = std::fabs(ind.kappa - k_data);
    out.push_back(make_check(r.id + ".closed_form",
                             "kappa from sigma(V,V) against the exact value",
                             dev_data, r.tol));
    out.push_back(make_check(r.id + ".numeric",
                             "kappa from the induced one-form against the "
                             "exact value",
                             dev_num, r.tol));
    out.push_back(make_check(r.id + ".paths_agree",
                             "closed-form and numerically induced kappa",
                             dev_paths, o.tol.kappa_paths));
  }
}

// --------------------------------------------------------------------------
// Per-entry criteria 2..7.

void check_entry(const EntryCase& entry, const VerifyOptions& o,
                 std::vector<CheckResult>& out) {
  const SpacetimeSolution sol = build(entry.name, entry.params);
  const std::string& n = sol.name;
  const InitialDataSet& data = sol.closed_form_data;
  const double kappa = sol.kappa_closed_form;

  // 2: vacuum oracle.
  {
    double worst = 0.0;
    for (const Vec& p : sol.chart.grid_on(sol.vacuum_axes, o.vacuum_grid, 0.02))
      worst = std::max(worst, ricci_residual(sol, p));
    out.push_back(make_check("2." + n + ".vacuum",
                             "max relative Ricci residual on the interior grid",
                             worst, o.tol.vacuum));
  }

  const std::vector<Vec> bases = base_grid(sol, o.theta_grid);

  // 3: induced-data oracle.
  {
    const InducedData ind = induce_numeric(sol, bases, o.foliation);
    const InducedComparison cmp = compare_with_closed_form(sol, ind);
    out.push_back(make_check("3." + n + ".sigma",
                             "numerically induced sigma vs closed form",
                             cmp.max_sigma_deviation, o.tol.induced));
    out.push_back(make_check("3." + n + ".V",
                             "numerically induced V vs closed form",
                             cmp.max_V_deviation, o.tol.induced));
    out.push_back(make_check("3." + n + ".kappa",
                             "numerically induced kappa vs closed form",
                             cmp.kappa_deviation, o.tol.kappa_paths));
  }

  // 4 + 5: the first-derivative theorem and the remainder order.
  {
    const CompareReport cr = compare_expansion(sol, bases, o.foliation);
    const double tol_q1 =
        (n == "kerr" || n == "kerr_inner") ? o.tol.q1_kerr : o.tol.q1_generic;
    out.push_back(make_check("4." + n + ".q1",
                             "q1(sigma, V) vs numeric first t-derivative",
                             cr.max_q1_deviation, tol_q1));
    double anchor = 0.0;
    for (const Vec& base : bases) {
      const Q1Result r = q1(data, base, kappa);
      anchor = std::max(anchor, std::fabs(r.q1_frame(0, 0) + 2.0 * kappa));
      anchor = std::max(anchor, std::fabs(r.q1_frame(0, 1)));
      anchor = std::max(anchor, std::fabs(r.q1_frame(0, 2)));
    }
    out.push_back(make_check("4." + n + ".anchors",
                             "q1(V,V) = -2 kappa and q1(V, e_a) = 0", anchor,
                             o.tol.q1_anchor));
    out.push_back(make_range_check(
        "5." + n + ".remainder_order",
        cr.remainder_at_noise_floor
            ? "remainder at integrator noise (exactly linear solution)"
            : "log-log slope of the first-order remainder",
        cr.remainder_slope, o.tol.slope_lo, o.tol.slope_hi,
        cr.remainder_at_noise_floor));
  }

  // 6: gauge identities at the first, middle and last base point.
  {
    double rows = 0.0, comm = 0.0, nw = 0.0, lemma = 0.0;
    for (std::size_t i : {std::size_t{0}, bases.size() / 2, bases.size() - 1}) {
      const IdentityReport rep = check_identities(sol, bases[i], o.foliation);
      rows = std::max({rows, rep.lie_dt_row[0], rep.lie_dt_row[1]});
      comm = std::max(comm, rep.commutator);
      nw = std::max(nw, rep.nabla_t_W);
      lemma = std::max(lemma, rep.lemma_transversal);
    }
    out.push_back(make_check("6." + n + ".lie_dt_rows",
                             "|L_t^m g(d_t, .)| for m = 1, 2", rows,
                             o.tol.lie_dt_row));
    out.push_back(make_check("6." + n + ".commutator", "|[W, d_t]|", comm,
                             o.tol.commutator));
    out.push_back(make_check("6." + n + ".nabla_t_W",
                             "|nabla_t W + kappa d_t|", nw, o.tol.nabla_t_w));
    out.push_back(make_check("6." + n + ".transversal_gradient",
                             "|nabla_t A + A^2 - R(d_t,.,d_t,.)| at t=0",
                             lemma, o.tol.lemma_transversal));
  }

  // 7: structural identities of the induced data.
  {
    double recon = 0.0, omega_v = 0.0, lie_omega = 0.0;
    double kernel_eig = 0.0, kernel_dir = 0.0;
    const OneFormField omega_field = connection_one_form_field(data, kappa);
    for (const Vec& p : bases) {
      const Vec p4 = sol.embed(p);
      const Mat G = sol.metric.eval(p4);
      const Vec w = connection_one_form(data, p, kappa);
      const Mat sig = data.sigma.eval(p);
      const Vec V = data.V.eval(p);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const double gh = G(sol.tangent_axis(i), sol.tangent_axis(j));
          recon = std::max(recon,
                           std::fabs(sig(i, j) - (gh + w[i] * w[j])));
        }
      omega_v = std::max(omega_v, std::fabs(dot(w, V) - kappa));
      lie_omega = std::max(
          lie_omega, max_abs(lie_derivative_oneform(omega_field, data.V, p)));

      const Mat deg = degenerate_metric(data, p, kappa);
      Vec evals;
      Mat evecs;
      sym_eigen(deg, evals, evecs);
      kernel_eig = std::max(kernel_eig, std::fabs(evals[0]) / evals[2]);
      Vec kvec(3);
      for (int i = 0; i < 3; ++i) kvec[i] = evecs(i, 0);
      const double cosang = dot(kvec, V) / (norm(kvec) * norm(V));
      kernel_dir = std::max(kernel_dir, 1.0 - std::fabs(cosang));
    }
    out.push_back(make_check("7." + n + ".reconstruction",
                             "|sigma - (g|_H + omega omega)|", recon,
                             o.tol.reconstruction));
    out.push_back(make_check("7." + n + ".omega_V", "|omega(V) - kappa|",
                             omega_v, o.tol.omega_v));
    out.push_back(make_check("7." + n + ".lie_V_omega", "|L_V omega|",
                             lie_omega, o.tol.lie_v_omega));
    out.push_back(make_check("7." + n + ".kernel_eigenvalue",
                             "smallest |eigenvalue| of g|_H over the largest",
                             kernel_eig, o.tol.kernel_eig));
    out.push_back(make_check("7." + n + ".kernel_direction",
                             "1 - |cos| between the kernel vector and V",
                             kernel_dir, o.tol.kernel_dir));
  }
}

// --------------------------------------------------------------------------
// Criterion 8: diffeomorphism equivariance of q1 on schwarzschild data.

void check_equivariance(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const SpacetimeSolution sol = build("schwarzschild", CatalogParams{});
  const InitialDataSet& data = sol.closed_form_data;
  const double kappa = sol.kappa_closed_form;

  // v = 2 v' (the stretched Killing coordinate).
  {
    Chart nc = data.chart;
    nc.lower[0] = -1.0;
    nc.upper[0] = 1.0;
    CoordinateChange cc;
    cc.new_chart = nc;
    cc.forward = {Expression::parse("2*v", nc.coords, nc.param_names),
                  Expression::parse("theta", nc.coords, nc.param_names),
                  Expression::parse("phi", nc.coords, nc.param_names)};
    cc.derivative = {Expression::parse("2", nc.coords, nc.param_names),
                     Expression::parse("1", nc.coords, nc.param_names),
                     Expression::parse("1", nc.coords, nc.param_names)};
    const double res =
        q1_equivariance_residual(data, cc, kappa, nc.grid_on({1}, 5, 0.1));
    out.push_back(make_check("8.schwarzschild.stretch_v",
                             "q1 pullback under v = 2 v'", res,
                             o.tol.equivariance));
  }

  // theta = theta' + 0.1 sin(theta'), a nonlinear reparametrization.
  {
    Chart nc = data.chart;
    nc.lower[1] = 0.12;
    nc.upper[1] = M_PI - 0.12;
    CoordinateChange cc;
    cc.new_chart = nc;
    cc.forward = {
        Expression::parse("v", nc.coords, nc.param_names),
        Expression::parse("theta + 0.1*sin(theta)", nc.coords, nc.param_names),
        Expression::parse("phi", nc.coords, nc.param_names)};
    cc.derivative = {
        Expression::parse("1", nc.coords, nc.param_names),
        Expression::parse("1 + 0.1*cos(theta)", nc.coords, nc.param_names),
        Expression::parse("1", nc.coords, nc.param_names)};
    const double res =
        q1_equivariance_residual(data, cc, kappa, nc.grid_on({1}, 5, 0.1));
    out.push_back(make_check("8.schwarzschild.reparam_theta",
                             "q1 pullback under a theta reparametrization",
                             res, o.tol.equivariance));
  }
}

// --------------------------------------------------------------------------
// Criterion 9: engine-level checks.

// Random smooth expressions built from a domain-safe pool, evaluated on
// [-0.9, 0.9]^dim; compares first and second jet coefficients with central
// finite differences of the plain evaluation.
void check_jets_vs_fd(const VerifyOptions& o, std::vector<CheckResult>& out) {
  std::mt19937 rng(20260808);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const std::vector<std::string> coords{"x", "y", "z"};
  std::function<std::string(int)> gen = [&](int depth) -> std::string {
    const double pick = unit(rng);
    if (depth <= 0 || pick < 0.25) {
      const double r = unit(rng);
      if (r < 0.45) return coords[rng() % 3];
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", coef(rng));
      return std::string(buf);
    }
    if (pick < 0.45) return "(" + gen(depth - 1) + " + " + gen(depth - 1) + ")";
    if (pick < 0.6) return "(" + gen(depth - 1) + "*" + gen(depth - 1) + ")";
    const double f = unit(rng);
    if (f < 0.3) return "sin(" + gen(depth - 1) + ")";
    if (f < 0.55) return "cos(" + gen(depth - 1) + ")";
    if (f < 0.75) return "atan(" + gen(depth - 1) + ")";
    if (f < 0.9) return "exp(0.3*(" + gen(depth - 1) + "))";
    return "(" + gen(depth - 1) + ")^2";
  };

  double worst = 0.0;
  const double h1 = 1e-5;   // first differences
  const double h2 = 1e-3;   // Richardson-extrapolated second differences; a
                            // plain second quotient at 1e-5 sits on the
                            // binary64 roundoff floor ~1e-5 |f|/|f''|
  int tested = 0;
  while (tested < 40) {
    const std::string src = gen(3);
    Expression e;
    try {
      e = Expression::parse(src, coords, {});
    } catch (const Error&) {
      continue;
    }
    double pt[3] = {1.8 * unit(rng) - 0.9, 1.8 * unit(rng) - 0.9,
                    1.8 * unit(rng) - 0.9};
    try {
      const Jet j = e.eval_jet(std::span<const double>(pt, 3), {}, 2);
      const double scale = std::max(1.0, std::fabs(j.value()));
      auto at = [&](int i, double dx) {
        double q[3] = {pt[0], pt[1], pt[2]};
        q[i] += dx;
        return e.eval(std::span<const double>(q, 3), {});
      };
      const double f0 = e.eval(std::span<const double>(pt, 3), {});
      for (int i = 0; i < 3; ++i) {
        const double fd = (at(i, h1) - at(i, -h1)) / (2.0 * h1);
        worst = std::max(worst, std::fabs(j.partial(i) - fd) /
                                    std::max(scale, std::fabs(fd)));
        const double d2h = (at(i, h2) - 2.0 * f0 + at(i, -h2)) / (h2 * h2);
        const double d22h =
            (at(i, 2 * h2) - 2.0 * f0 + at(i, -2 * h2)) / (4.0 * h2 * h2);
        const double fd2 = (4.0 * d2h - d22h) / 3.0;
        worst = std::max(worst, std::fabs(j.partial2(i, i) - fd2) /
                                    std::max(scale, std::fabs(fd2)));
      }
      ++tested;
    } catch (const DomainError&) {
      continue;
    }
  }
  out.push_back(make_check("9.engine.jets_vs_fd",
                           "jet derivatives vs central differences on a "
                           "random expression corpus",
                           worst, o.tol.jet_fd));
}

void check_riemann_symmetries(const VerifyOptions& o,
                              std::vector<CheckResult>& out) {
  std::mt19937 rng(977);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (const EntryCase& entry : entry_cases(VerifyOptions{})) {
    const SpacetimeSolution sol = build(entry.name, entry.params);
    for (int trial = 0; trial < 5; ++trial) {
      Vec p(4);
      for (int i = 0; i < 4; ++i) {
        const double lo = sol.chart.lower[i], hi = sol.chart.upper[i];
        p[i] = lo + (0.1 + 0.8 * unit(rng)) * (hi - lo);
      }
      const Rank4 r = riemann(sol.metric, p);
      double scale = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l)
              scale = std::max(scale, std::fabs(r.a[i][j][k][l]));
      scale = std::max(scale, 1.0);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          for (int k = 0; k < 4; ++k)
            for (int l = 0; l < 4; ++l) {
              worst = std::max(
                  worst, std::fabs(r.a[i][j][k][l] + r.a[j][i][k][l]) / scale);
              worst = std::max(
                  worst, std::fabs(r.a[i][j][k][l] + r.a[i][j][l][k]) / scale);
              worst = std::max(
                  worst, std::fabs(r.a[i][j][k][l] - r.a[k][l][i][j]) / scale);
              const double bianchi =
                  r.a[i][j][k][l] + r.a[j][k][i][l] + r.a[k][i][j][l];
              worst = std::max(worst, std::fabs(bianchi) / scale);
            }
    }
  }
  out.push_back(make_check("9.engine.riemann_symmetries",
                           "antisymmetries, pair symmetry and first Bianchi",
                           worst, o.tol.riemann_sym));
}

void check_null_drift(const VerifyOptions& o, std::vector<CheckResult>& out) {
  double worst = 0.0;
  for (const EntryCase& entry : entry_cases(VerifyOptions{})) {
    const SpacetimeSolution sol = build(entry.name, entry.params);
    FoliationOptions fo;
    fo.steps = 200;
    const Vec base = base_grid(sol, 1).front();
    const FoliationMap fmap =
        evolve_foliation(sol, {base}, {o.null_drift_t_max}, fo);
    worst = std::max(worst, fmap.tracks.front().max_null_drift);
  }
  out.push_back(make_check("9.engine.null_norm_drift",
                           "max |g(gamma', gamma')| along 200-step geodesics "
                           "to t = 0.1",
                           worst, o.tol.null_drift));
}

}  // namespace

int criterion_of(const std::string& check_id) {
  return std::atoi(check_id.c_str());
}

VerifySummary run_verification(const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<EntryCase> cases = entry_cases(opts);
  const bool full_suite = opts.entries.empty();

  // Independent units of work; results are spliced back in a fixed order.
  std::vector<std::function<void(std::vector<CheckResult>&)>> jobs;
  if (full_suite)
    jobs.push_back([&](std::vector<CheckResult>& r) { check_kappa(opts, r); });
  for (const EntryCase& entry : cases)
    jobs.push_back([&opts, entry](std::vector<CheckResult>& r) {
      check_entry(entry, opts, r);
    });
  if (full_suite) {
    jobs.push_back(
        [&](std::vector<CheckResult>& r) { check_equivariance(opts, r); });
    jobs.push_back(
        [&](std::vector<CheckResult>& r) { check_jets_vs_fd(opts, r); });
    jobs.push_back([&](std::vector<CheckResult>& r) {
      check_riemann_symmetries(opts, r);
    });
    jobs.push_back(
        [&](std::vector<CheckResult>& r) { check_null_drift(opts, r); });
  }

  std::vector<std::vector<CheckResult>> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
  {
    std::mutex mu;
    std::size_t next = 0;
    const unsigned workers = std::max(1u, std::min<unsigned>(
        std::thread::hardware_concurrency(), static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t mine;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next >= jobs.size()) return;
            mine = next++;
          }
          try {
            jobs[mine](results[mine]);
          } catch (const std::exception& e) {
            errors[mine] = e.what();
          }
        }
      });
    for (std::thread& t : pool) t.join();
  }

  VerifySummary summary;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i].empty()) {
      summary.checks.push_back(
          make_check("error.job" + std::to_string(i), errors[i],
                     std::numeric_limits<double>::infinity(), 0.0));
      continue;
    }
    for (CheckResult& c : results[i]) summary.checks.push_back(std::move(c));
  }

  const auto stop = std::chrono::steady_clock::now();
  summary.wall_seconds =
      std::chrono::duration<double>(stop - start).count();
  if (full_suite)
    summary.checks.push_back(make_check(
        "9.engine.wall_time", "full suite wall time in seconds",
        summary.wall_seconds, opts.tol.wall_seconds));
  for (const CheckResult& c : summary.checks)
    summary.all_pass = summary.all_pass && c.pass;
  return summary;
}

}  // namespace horizon
