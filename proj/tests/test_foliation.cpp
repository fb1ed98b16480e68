#include <doctest.h>

#include <cmath>

#include "horizon/foliation.hpp"

using namespace horizon;

TEST_SUITE_BEGIN("foliation");

TEST_CASE("canonical transversal: schwarzschild is the radial direction") {
  const SpacetimeSolution sol = build("schwarzschild", CatalogParams{});
  const TransversalSolve ts = canonical_transversal(sol, Vec{0.3, 1.1, 2.0});
  CHECK(ts.L[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::fabs(ts.L[1]) < 1e-14);
  CHECK(std::fabs(ts.L[2]) < 1e-14);
  CHECK(std::fabs(ts.L[3]) < 1e-14);
  CHECK(std::fabs(ts.res_g_LV) < 1e-12);
  CHECK(std::fabs(ts.res_g_Le) < 1e-12);
  CHECK(std::fabs(ts.res_g_LL) < 1e-12);
}

TEST_CASE("canonical transversal: misner is the chart time direction") {
  const SpacetimeSolution sol = build("misner", CatalogParams{});
  const TransversalSolve ts = canonical_transversal(sol, Vec{0.2, 0.1, -0.3});
  CHECK(ts.L[0] == doctest::Approx(1.0));
  for (int i = 1; i < 4; ++i) CHECK(std::fabs(ts.L[i]) < 1e-14);
}

TEST_CASE("canonical transversal: kerr solves the conditions to 1e-12") {
  CatalogParams kp;
  kp.m = 1.0;
  kp.a = 0.5;
  const SpacetimeSolution sol = build("kerr", kp);
  for (double th : {M_PI / 4.0, M_PI / 2.0, 2.2}) {
    const TransversalSolve ts = canonical_transversal(sol, Vec{0.3, th, 2.0});
    CHECK(std::fabs(ts.res_g_LV) < 1e-12);
    CHECK(std::fabs(ts.res_g_Le) < 1e-12);
    CHECK(std::fabs(ts.res_g_LL) < 1e-12);
  }
}

TEST_CASE("jet transversal matches finite differences of the solve") {
  CatalogParams tp;
  tp.m = 0.3;
  tp.l = 0.8;
  const SpacetimeSolution sol = build("taub_nut", tp);
  const Vec base{1.0, M_PI / 2.5, 2.0};
  const auto Lj = canonical_transversal_jet(sol, base);
  const double d = 1e-6;
  for (int k = 0; k < 3; ++k) {
    Vec bp = base, bm = base;
    bp[k] += d;
    bm[k] -= d;
    const TransversalSolve p = canonical_transversal(sol, bp);
    const TransversalSolve m = canonical_transversal(sol, bm);
    for (int i = 0; i < 4; ++i) {
      const double fd = (p.L[i] - m.L[i]) / (2.0 * d);
      CHECK(Lj[i].partial(k) == doctest::Approx(fd).epsilon(1e-5));
    }
  }
}

TEST_CASE("schwarzschild geodesics are exactly radial with identity Jacobian") {
  const SpacetimeSolution sol = build("schwarzschild", CatalogParams{});
  const Vec base{0.4, 1.0, 2.5};
  FoliationOptions fo;
  fo.steps = 16;
  const FoliationMap fmap = evolve_foliation(sol, {base}, {0.05, -0.05}, fo);
  const FoliationTrack& tr = fmap.tracks.front();
  for (const FoliationSample& s : tr.samples) {
    CHECK(s.x[0] == doctest::Approx(2.0 + s.t).epsilon(1e-14));
    CHECK(s.x[1] == doctest::Approx(base[0]));
    CHECK(s.x[2] == doctest::Approx(base[1]));
    CHECK(s.x[3] == doctest::Approx(base[2]));
    // Jacobian: horizon coordinates map to themselves
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 3; ++k) {
        const double expect = (i == sol.tangent_axis(k)) ? 1.0 : 0.0;
        CHECK(s.jx[i][k] == doctest::Approx(expect).epsilon(1e-13));
      }
  }
}

TEST_CASE("misner foliation is the identity chart map") {
  const SpacetimeSolution sol = build("misner", CatalogParams{});
  const Vec base{0.3, -0.2, 0.6};
  FoliationOptions fo;
  const FoliationMap fmap = evolve_foliation(sol, {base}, {0.1}, fo);
  const FoliationSample& s = fmap.tracks.front().samples.back();
  CHECK(s.x[0] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(s.x[1] == doctest::Approx(base[0]));
  CHECK(s.x[2] == doctest::Approx(base[1]));
  CHECK(s.x[3] == doctest::Approx(base[2]));
}

TEST_CASE("null norm is conserved along kerr geodesics") {
  CatalogParams kp;
  kp.m = 1.0;
  kp.a = 0.5;
  const SpacetimeSolution sol = build("kerr", kp);
  FoliationOptions fo;
  fo.steps = 200;
  const FoliationMap fmap =
      evolve_foliation(sol, {Vec{0.3, M_PI / 2.5, 2.0}}, {0.1}, fo);
  CHECK(fmap.tracks.front().max_null_drift < 1e-10);
}

TEST_CASE("chart exit raises") {
  const SpacetimeSolution sol = build("schwarzschild", CatalogParams{});
  FoliationOptions fo;
  CHECK_THROWS_AS(
      evolve_foliation(sol, {Vec{0.3, 1.1, 2.0}}, {10.0}, fo),
      FoliationError);
}

TEST_CASE("pullback: order-0 frame dictionary and first derivatives") {
  const SpacetimeSolution sol = build("schwarzschild", CatalogParams{});
  const Vec base{0.3, M_PI / 2.5, 2.0};
  const ExpansionRecord rec = pullback_metric_jet(sol, base);
  REQUIRE(rec.in_frame.size() == 4);
  const Mat& m0 = rec.in_frame[0];
  CHECK(m0(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fabs(m0(0, 0)) < 1e-12);
  CHECK(std::fabs(m0(0, 2)) < 1e-12);
  CHECK(std::fabs(m0(1, 1)) < 1e-12);
  CHECK(std::fabs(m0(1, 2)) < 1e-12);
  CHECK(m0(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m0(3, 3) == doctest::Approx(1.0).epsilon(1e-12));

  // (L_t g)(V, V) = -2 kappa = -1/2 and the orthonormal sphere direction
  // carries d_r(r^2)/4 = 1 at r = 2m.
  const Mat& m1 = rec.in_frame[1];
  CHECK(m1(1, 1) == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(m1(2, 2) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(m1(3, 3) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::fabs(m1(0, 1)) < 1e-9);
}

TEST_CASE("higher t-derivatives match the radial expansion of the metric") {
  // In the adapted chart the schwarzschild pullback is g_vv(2m + t), so the
  // extracted derivatives must follow d^m/dr^m (2m/r - 1) at r = 2m, and the
  // orthonormal sphere direction follows d^m/dr^m (r^2) / 4.
  const SpacetimeSolution sol = build("schwarzschild", CatalogParams{});
  const ExpansionRecord rec =
      pullback_metric_jet(sol, Vec{0.3, M_PI / 2.5, 2.0});
  CHECK(rec.in_frame[2](1, 1) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(rec.in_frame[2](2, 2) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(rec.in_frame[3](1, 1) == doctest::Approx(-0.75).epsilon(1e-3));
  CHECK(std::fabs(rec.in_frame[3](2, 2)) < 1e-4);  // r^2 has no third term
  // the extrapolation error estimates are honest about the noise growth
  CHECK(rec.error_estimates[1] < 1e-8);
  CHECK(rec.error_estimates[3] < 1e-2);
}

TEST_CASE("induce_numeric reproduces the stated one-forms") {
  const SpacetimeSolution schw = build("schwarzschild", CatalogParams{});
  {
    const InducedData ind = induce_numeric(schw, {Vec{0.3, 1.1, 2.0}});
    CHECK(ind.omega[0][0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::fabs(ind.omega[0][1]) < 1e-12);
    CHECK(std::fabs(ind.omega[0][2]) < 1e-12);
    const InducedComparison cmp = compare_with_closed_form(schw, ind);
    CHECK(cmp.max_sigma_deviation < 1e-10);
  }

  CatalogParams kp;
  kp.m = 1.0;
  kp.a = 0.5;
  const SpacetimeSolution kerr = build("kerr", kp);
  for (double th : {M_PI / 4.0, M_PI / 2.0}) {
    const Vec p{0.0, th, 1.0};
    const InducedData ind = induce_numeric(kerr, {p});
    const Vec w_cf =
        connection_one_form(kerr.closed_form_data, p, kerr.kappa_closed_form);
    for (int i = 0; i < 3; ++i)
      CHECK(ind.omega[0][i] == doctest::Approx(w_cf[i]).epsilon(1e-8));
  }

  const SpacetimeSolution misner = build("misner", CatalogParams{});
  const InducedData ind = induce_numeric(misner, {Vec{0.1, 0.2, 0.3}});
  CHECK(ind.omega[0][0] == doctest::Approx(1.0));
  CHECK(ind.kappa == doctest::Approx(1.0));
  const InducedComparison cmp = compare_with_closed_form(misner, ind);
  CHECK(cmp.max_sigma_deviation < 1e-12);
}

TEST_CASE("a shifted horizon locus is detected") {
  SpacetimeSolution sol = build("schwarzschild", CatalogParams{});
  sol.horizon.value = 2.01;  // deliberately off the lightlike locus
  CHECK_THROWS_AS(induce_numeric(sol, {Vec{0.3, 1.1, 2.0}}), FoliationError);
}

TEST_CASE("gauge identities hold at machine-precision level") {
  const SpacetimeSolution schw = build("schwarzschild", CatalogParams{});
  const IdentityReport rep = check_identities(schw, Vec{0.3, M_PI / 2.5, 2.0});
  CHECK(rep.commutator < 1e-8);
  CHECK(rep.nabla_t_W < 1e-8);
  CHECK(rep.lemma_transversal < 1e-8);
  CHECK(rep.lie_dt_row[0] < 1e-8);
  CHECK(rep.lie_dt_row[1] < 1e-6);

  const SpacetimeSolution misner = build("misner", CatalogParams{});
  const IdentityReport mrep =
      check_identities(misner, Vec{0.2, 0.1, -0.3});
  CHECK(mrep.nabla_t_W < 1e-10);  // kappa = 1
}

TEST_SUITE_END();
