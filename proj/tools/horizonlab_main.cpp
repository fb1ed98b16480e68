// horizonlab - batch front-end for the Killing-horizon verification library.
//
// Subcommands:
//   validate  check an initial data set file against its constraints
//   induce    numerically induce (sigma, V) from a catalog spacetime and
//             compare with the closed form
//   expand    evaluate the first-order expansion operator q1 on a grid
//   verify    run the full verification suite
//
// Exit codes: 0 pass, 1 check failure, 2 usage or parse error.

#include <cmath>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "horizon/catalog.hpp"
#include "horizon/data_io.hpp"
#include "horizon/expansion.hpp"
#include "horizon/report.hpp"
#include "horizon/verification.hpp"

namespace {

using namespace horizon;

struct OutputOpts {
  std::string path;
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("--out", out.path, "Write the report to this path");
  cmd->add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

HorizonBranch parse_branch(const std::string& b) {
  if (b == "outer") return HorizonBranch::kOuter;
  if (b == "inner") return HorizonBranch::kInner;
  if (b == "plus") return HorizonBranch::kPlus;
  if (b == "minus") return HorizonBranch::kMinus;
  throw CatalogError("unknown branch '" + b + "'");
}

struct CatalogFlags {
  std::string spacetime;
  double m = 1.0;
  double a = 0.5;
  double l = 1.0;
  double alpha = -2.0;
  std::string branch = "outer";

  CatalogParams params() const {
    CatalogParams p;
    p.m = m;
    p.a = a;
    p.l = l;
    p.alpha = alpha;
    p.branch = parse_branch(branch);
    return p;
  }
};

void add_catalog_flags(CLI::App* cmd, CatalogFlags& f, bool required) {
  auto* opt = cmd->add_option("--spacetime", f.spacetime,
                              "Catalog entry: schwarzschild | kerr | misner | "
                              "quotient_schwarzschild | taub_nut");
  if (required) opt->required();
  cmd->add_option("--m", f.m, "Mass parameter");
  cmd->add_option("--a", f.a, "Kerr angular momentum, 0 < |a| < m");
  cmd->add_option("--l", f.l, "Taub-NUT parameter, l != 0");
  cmd->add_option("--alpha", f.alpha, "Misner parameter, alpha != 0");
  cmd->add_option("--branch", f.branch,
                  "Horizon branch: outer|inner (kerr), plus|minus (taub_nut)")
      ->check(CLI::IsMember({"outer", "inner", "plus", "minus"}));
}

int run_validate(const std::string& input, const ValidationOptions& vopts,
                 const OutputOpts& out) {
  const InitialDataSet data = load_initial_data(input);
  const ValidationReport rep = validate(data, vopts);

  std::vector<CheckResult> checks;
  checks.push_back({"validate.killing", "max |L_V sigma| / |sigma|",
                    rep.max_killing_residual, vopts.tol_killing,
                    rep.killing_ok});
  checks.push_back({"validate.length", "max |sigma(V,V) - mean| / mean",
                    rep.length_residual, vopts.tol_length, rep.length_ok});
  checks.push_back({"validate.nowhere_zero", "min sigma(V,V) > 0", -rep.min_vv,
                    0.0, rep.nowhere_zero_ok});
  checks.push_back({"validate.kappa", data.label + ": kappa = sqrt(mean)",
                    rep.kappa, rep.kappa + 1.0, true});

  emit_report(out.path, out.format == "csv"
                            ? checks_to_csv(checks)
                            : checks_to_json(checks, 0.0));
  return rep.passed() ? 0 : 1;
}

int run_induce(const CatalogFlags& flags, int theta_grid,
               const FoliationOptions& fopts, const OutputOpts& out) {
  const SpacetimeSolution sol = build(flags.spacetime, flags.params());
  const std::vector<Vec> grid =
      sol.horizon_chart.grid_on({1}, theta_grid, 0.05);
  const InducedData ind = induce_numeric(sol, grid, fopts);
  const InducedComparison cmp = compare_with_closed_form(sol, ind);

  std::vector<CheckResult> checks;
  checks.push_back({"induce." + sol.name + ".sigma",
                    "max componentwise |sigma_num - sigma_closed|",
                    cmp.max_sigma_deviation, 1e-7,
                    cmp.max_sigma_deviation < 1e-7});
  checks.push_back({"induce." + sol.name + ".V",
                    "max componentwise |V_num - V_closed|", cmp.max_V_deviation,
                    1e-7, cmp.max_V_deviation < 1e-7});
  checks.push_back({"induce." + sol.name + ".kappa",
                    "kappa = " + std::to_string(ind.kappa), cmp.kappa_deviation,
                    1e-9, cmp.kappa_deviation < 1e-9});
  emit_report(out.path, out.format == "csv"
                            ? checks_to_csv(checks)
                            : checks_to_json(checks, 0.0));
  for (const CheckResult& c : checks)
    if (!c.pass) return 1;
  return 0;
}

int run_expand(const CatalogFlags& flags, const std::string& input,
               int theta_grid, const OutputOpts& out) {
  InitialDataSet data;
  double kappa = 0.0;
  if (!input.empty()) {
    data = load_initial_data(input);
    if (data.chart.dim() != 3)
      throw ParseError(0, "3-dimensional initial data",
                       "expand needs 3-dimensional initial data, got " +
                           std::to_string(data.chart.dim()));
    kappa = surface_gravity(data);
  } else {
    const SpacetimeSolution sol = build(flags.spacetime, flags.params());
    data = induced_data_closed_form(sol);
    kappa = sol.kappa_closed_form;
  }

  const std::vector<Vec> grid = data.chart.grid_on({1}, theta_grid, 0.05);
  ResidualTable table;
  table.columns = data.chart.coords;
  for (const char* c :
       {"q1_VV", "q1_Ve2", "q1_Ve3", "q1_e2e2", "q1_e2e3", "q1_e3e3", "kappa"})
    table.columns.push_back(c);
  for (const Vec& p : grid) {
    const Q1Result r = q1(data, p, kappa);
    std::vector<double> row;
    for (int i = 0; i < 3; ++i) row.push_back(p[i]);
    row.push_back(r.q1_frame(0, 0));
    row.push_back(r.q1_frame(0, 1));
    row.push_back(r.q1_frame(0, 2));
    row.push_back(r.q1_frame(1, 1));
    row.push_back(r.q1_frame(1, 2));
    row.push_back(r.q1_frame(2, 2));
    row.push_back(kappa);
    table.rows.push_back(std::move(row));
  }
  emit_report(out.path, out.format == "csv"
                            ? table_to_csv(table)
                            : table_to_json("q1." + data.label, table));
  return 0;
}

int run_verify(const VerifyOptions& vopts, const OutputOpts& out) {
  const VerifySummary summary = run_verification(vopts);
  emit_report(out.path,
              out.format == "csv"
                  ? checks_to_csv(summary.checks)
                  : checks_to_json(summary.checks, summary.wall_seconds));
  return summary.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "horizonlab: induced initial data, null-time foliations and the "
      "first-order expansion of Killing-horizon metrics, cross-checked "
      "against a catalog of exact vacuum spacetimes"};
  app.require_subcommand(1);
  // frees --h for the differencing-step option below
  app.set_help_flag("--help", "Print help");

  // validate
  std::string input_path;
  ValidationOptions vopts;
  OutputOpts vout;
  auto* cmd_validate =
      app.add_subcommand("validate", "Check an initial data set file");
  cmd_validate->add_option("input", input_path, "JSON initial data file")
      ->required();
  cmd_validate->add_option("--grid", vopts.grid_per_axis,
                           "Validation grid points per axis");
  cmd_validate->add_option("--tol-killing", vopts.tol_killing,
                           "Killing residual tolerance");
  cmd_validate->add_option("--tol-length", vopts.tol_length,
                           "Constant-length residual tolerance");
  add_output_flags(cmd_validate, vout);

  // induce
  CatalogFlags iflags;
  int itheta = 7;
  FoliationOptions ifol;
  OutputOpts iout;
  auto* cmd_induce = app.add_subcommand(
      "induce", "Numerically induce (sigma, V) and compare with closed form");
  add_catalog_flags(cmd_induce, iflags, /*required=*/true);
  cmd_induce->add_option("--theta-grid", itheta, "Horizon grid points");
  cmd_induce->add_option("--tol-parallel", ifol.parallel_tol,
                         "Tolerance on nabla_X W being parallel to W");
  add_output_flags(cmd_induce, iout);

  // expand
  CatalogFlags eflags;
  std::string einput;
  int etheta = 7;
  OutputOpts eout;
  auto* cmd_expand =
      app.add_subcommand("expand", "Evaluate q1 on a grid of horizon points");
  add_catalog_flags(cmd_expand, eflags, /*required=*/false);
  cmd_expand->add_option("--input", einput, "JSON initial data file");
  cmd_expand->add_option("--theta-grid", etheta, "Grid points");
  add_output_flags(cmd_expand, eout);

  // verify
  VerifyOptions wopts;
  OutputOpts wout;
  bool verify_all = false;
  auto* cmd_verify =
      app.add_subcommand("verify", "Run the full verification suite");
  cmd_verify->add_flag("--all", verify_all,
                       "Run every catalog entry (the default)");
  cmd_verify->add_option("--spacetime", wopts.entries,
                         "Restrict to these catalog entries");
  cmd_verify->add_option("--theta-grid", wopts.theta_grid,
                         "Horizon grid points per entry");
  cmd_verify->add_option("--grid", wopts.vacuum_grid,
                         "Vacuum-check grid points per axis");
  cmd_verify->add_option("--h", wopts.foliation.h,
                         "Differencing step for t-derivatives");
  cmd_verify->add_option("--t-max", wopts.null_drift_t_max,
                         "Integration extent of the null-norm drift check");
  cmd_verify->add_option("--tol-vacuum", wopts.tol.vacuum,
                         "Vacuum residual tolerance");
  cmd_verify->add_option("--tol-induced", wopts.tol.induced,
                         "Induced-data deviation tolerance");
  cmd_verify->add_option("--tol-q1", wopts.tol.q1_generic,
                         "q1 deviation tolerance (non-Kerr entries)");
  cmd_verify->add_option("--tol-q1-kerr", wopts.tol.q1_kerr,
                         "q1 deviation tolerance for Kerr");
  add_output_flags(cmd_verify, wout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_validate->parsed()) return run_validate(input_path, vopts, vout);
    if (cmd_induce->parsed()) return run_induce(iflags, itheta, ifol, iout);
    if (cmd_expand->parsed()) {
      if (einput.empty() && eflags.spacetime.empty()) {
        std::fprintf(stderr, "expand: need --spacetime or --input\n");
        return 2;
      }
      return run_expand(eflags, einput, etheta, eout);
    }
    if (cmd_verify->parsed()) return run_verify(wopts, wout);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const CatalogError& e) {
    std::fprintf(stderr, "parameter error: %s\n", e.what());
    return 2;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "constraint failure: %s\n", e.what());
    return 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
