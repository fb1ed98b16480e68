#include <doctest.h>

#include <cmath>

#include "horizon/curvature.hpp"
#include "horizon/expansion.hpp"

using namespace horizon;

TEST_SUITE_BEGIN("expansion");

TEST_CASE("q1 anchors and product-data values") {
  const SpacetimeSolution schw = build("schwarzschild", CatalogParams{});
  const InitialDataSet& data = schw.closed_form_data;
  const Vec p{0.3, M_PI / 2.5, 2.0};
  const Q1Result r = q1(data, p, 0.25);
  CHECK(r.q1_frame(0, 0) == doctest::Approx(-0.5));
  CHECK(r.q1_frame(0, 1) == 0.0);
  CHECK(r.q1_frame(0, 2) == 0.0);
  // (1/kappa) Ric^sigma(e,e) with Ric(e,e) = 1/4 on the radius-2 sphere
  CHECK(r.q1_frame(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.q1_frame(2, 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fabs(r.q1_frame(1, 2)) < 1e-12);

  const SpacetimeSolution misner = build("misner", CatalogParams{});
  const Q1Result rm = q1(misner.closed_form_data, Vec{0.1, 0.2, 0.3}, 1.0);
  CHECK(rm.q1_frame(0, 0) == doctest::Approx(-2.0));
  for (int a = 1; a < 3; ++a)
    for (int b = 1; b < 3; ++b) CHECK(std::fabs(rm.q1_frame(a, b)) < 1e-14);
}

TEST_CASE("transversal gradient decomposition") {
  CatalogParams kp;
  kp.m = 1.0;
  kp.a = 0.5;
  const SpacetimeSolution kerr = build("kerr", kp);
  const InitialDataSet& data = kerr.closed_form_data;
  const double kappa = kerr.kappa_closed_form;
  const Vec p{0.3, M_PI / 2.0, 2.0};
  const Q1Result r = q1(data, p, kappa);
  const Mat A = transversal_gradient(data, p, kappa);

  // symmetric part = q1/2 on the complement
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(0.5 * (A(a, b) + A(b, a)) ==
            doctest::Approx(0.5 * r.q1_frame(1 + a, 1 + b)).epsilon(1e-12));

  // antisymmetric part = d omega / (2 kappa), via the independent
  // exterior-derivative path
  const OneFormField w = connection_one_form_field(data, kappa);
  const Mat dw = exterior_derivative_oneform(w, p);
  const double expected =
      pair(dw, r.frame.vectors[0], r.frame.vectors[1]) / (2.0 * kappa);
  CHECK(0.5 * (A(0, 1) - A(1, 0)) ==
        doctest::Approx(expected).epsilon(1e-9));

  // schwarzschild: d omega vanishes, so A is half of q1
  const SpacetimeSolution schw = build("schwarzschild", CatalogParams{});
  const Mat As =
      transversal_gradient(schw.closed_form_data, Vec{0.3, 1.1, 2.0}, 0.25);
  const Q1Result rs = q1(schw.closed_form_data, Vec{0.3, 1.1, 2.0}, 0.25);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(As(a, b) ==
            doctest::Approx(0.5 * rs.q1_frame(1 + a, 1 + b)).epsilon(1e-12));

  // misner: everything vanishes
  const SpacetimeSolution misner = build("misner", CatalogParams{});
  CHECK(max_abs(transversal_gradient(misner.closed_form_data,
                                     Vec{0.1, 0.2, 0.3}, 1.0)) < 1e-14);
}

TEST_CASE("first-order metric jet in adapted coordinates") {
  const SpacetimeSolution schw = build("schwarzschild", CatalogParams{});
  const FirstOrderMetric fom(schw.closed_form_data, 0.25);
  const Vec p{0.3, M_PI / 2.5, 2.0};
  for (double t : {0.0, 0.01, -0.02}) {
    const Mat g = fom.eval_adapted(t, p);
    CHECK(g(0, 0) == 0.0);  // ghat(d_t, d_t) = 0 for all t
    // ghat(V, V)(t) = -t/2 + O(t^2), exactly -t/2 in the first-order jet
    const Vec V = schw.closed_form_data.V.eval(p);
    double gvv = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) gvv += g(1 + i, 1 + j) * V[i] * V[j];
    CHECK(gvv == doctest::Approx(-0.5 * t).epsilon(1e-13));
    // ghat(d_t, V) = 1
    double gtv = 0.0;
    for (int i = 0; i < 3; ++i) gtv += g(0, 1 + i) * V[i];
    CHECK(gtv == doctest::Approx(1.0));
  }

  // misner: the exact solution is linear, ghat(V,V)(t) = -2t exactly
  const SpacetimeSolution misner = build("misner", CatalogParams{});
  const FirstOrderMetric fm(misner.closed_form_data, 1.0);
  const Vec q{0.1, 0.2, 0.3};
  FoliationOptions fo;
  const FoliationMap fmap = evolve_foliation(misner, {q}, {0.25}, fo);
  const Mat exact = adapted_metric(misner, fmap.tracks.front().samples.back());
  const Mat predict = fm.eval_adapted(0.25, q);
  CHECK(max_abs(exact - predict) < 1e-12);
}

TEST_CASE("compare: schwarzschild and kerr against the foliation") {
  const SpacetimeSolution schw = build("schwarzschild", CatalogParams{});
  const CompareReport cs =
      compare_expansion(schw, schw.horizon_chart.grid_on({1}, 3, 0.1));
  CHECK(cs.max_q1_deviation < 1e-7);
  CHECK(cs.remainder_slope > 1.9);
  CHECK(cs.remainder_slope < 2.1);

  CatalogParams kp;
  kp.m = 1.0;
  kp.a = 0.5;
  const SpacetimeSolution kerr = build("kerr", kp);
  const CompareReport ck =
      compare_expansion(kerr, kerr.horizon_chart.grid_on({1}, 7, 0.05));
  CHECK(ck.max_q1_deviation < 1e-5);
  CHECK(ck.remainder_slope > 1.9);
  CHECK(ck.remainder_slope < 2.1);

  const SpacetimeSolution misner = build("misner", CatalogParams{});
  const CompareReport cm =
      compare_expansion(misner, misner.horizon_chart.grid_on({1}, 3, 0.1));
  CHECK(cm.max_q1_deviation < 1e-7);
  CHECK(cm.remainder_at_noise_floor);  // exactly linear solution
}

TEST_CASE("pullback of data under a coordinate change keeps the constraints") {
  const SpacetimeSolution schw = build("schwarzschild", CatalogParams{});
  const InitialDataSet& data = schw.closed_form_data;
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
  const InitialDataSet pulled = pullback_data(data, cc);
  ValidationOptions vo;
  vo.grid_per_axis = 5;
  const ValidationReport rep = validate(pulled, vo);
  CHECK(rep.passed());
  // kappa is a diffeomorphism invariant
  CHECK(rep.kappa == doctest::Approx(0.25).epsilon(1e-12));

  const double res =
      q1_equivariance_residual(data, cc, 0.25, nc.grid_on({1}, 5, 0.1));
  CHECK(res < 1e-8);
}

TEST_SUITE_END();
