#include <doctest.h>

#include <cmath>
#include <random>

#include "horizon/expression.hpp"
#include "support/oracles.hpp"

using namespace horizon;
using horizon::testing::random_poly;
using horizon::testing::RandomPoly;

TEST_SUITE_BEGIN("jet");

TEST_CASE("layout is graded lexicographic and stable") {
  const JetLayout& lay = JetLayout::get(2, 2);
  REQUIRE(lay.count == 6);
  // (0,0); (1,0), (0,1); (2,0), (1,1), (0,2)
  CHECK(lay.exponents[0] == std::array<std::uint8_t, 4>{0, 0, 0, 0});
  CHECK(lay.exponents[1] == std::array<std::uint8_t, 4>{1, 0, 0, 0});
  CHECK(lay.exponents[2] == std::array<std::uint8_t, 4>{0, 1, 0, 0});
  CHECK(lay.exponents[3] == std::array<std::uint8_t, 4>{2, 0, 0, 0});
  CHECK(lay.exponents[4] == std::array<std::uint8_t, 4>{1, 1, 0, 0});
  CHECK(lay.exponents[5] == std::array<std::uint8_t, 4>{0, 2, 0, 0});
  CHECK(JetLayout::get(4, 4).count == 70);
  CHECK(JetLayout::get(3, 0).count == 1);
}

TEST_CASE("polynomial jets equal the exact shifted-polynomial coefficients") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> pt(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const RandomPoly p = random_poly(rng);
    const Expression e = Expression::parse(p.source(), {"x", "y", "z"}, {});
    CHECK(e.structurally_equal(
        Expression::parse(e.str(), {"x", "y", "z"}, {})));
    const std::array<double, 3> x0{double(pt(rng)), double(pt(rng)),
                                   double(pt(rng))};
    const auto taylor = p.taylor_at(x0);
    for (int order = 0; order <= 4; ++order) {
      const Jet j = e.eval_jet(std::span<const double>(x0.data(), 3), {}, order);
      const JetLayout& lay = j.layout();
      for (int i = 0; i < j.size(); ++i) {
        horizon::testing::Exponents a{lay.exponents[i][0], lay.exponents[i][1],
                                      lay.exponents[i][2]};
        const auto it = taylor.terms.find(a);
        const double expect = (it == taylor.terms.end()) ? 0.0 : it->second;
        CHECK(j.coeff(i) == expect);  // integer arithmetic, bitwise equal
      }
    }
  }
}

TEST_CASE("maclaurin series of sin") {
  const Expression e = Expression::parse("sin(x)", {"x"}, {});
  double x0 = 0.0;
  const Jet j = e.eval_jet(std::span<const double>(&x0, 1), {}, 3);
  CHECK(j.coeff(0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(j.coeff(1) == doctest::Approx(1.0));
  CHECK(j.coeff(2) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(j.coeff(3) == doctest::Approx(-1.0 / 6.0));
}

TEST_CASE("sum, product and chain rules against jet arithmetic") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  const std::vector<std::string> coords{"x", "y"};
  const Expression f =
      Expression::parse("x^2*y + cos(x)", coords, {});
  const Expression g = Expression::parse("y - x*y^2", coords, {});
  for (int trial = 0; trial < 20; ++trial) {
    double p[2] = {u(rng), u(rng)};
    std::span<const double> pt(p, 2);
    const Jet jf = f.eval_jet(pt, {}, 4);
    const Jet jg = g.eval_jet(pt, {}, 4);
    const Jet jsum = (f + g).eval_jet(pt, {}, 4);
    const Jet jprod = (f * g).eval_jet(pt, {}, 4);
    for (int i = 0; i < jf.size(); ++i) {
      CHECK(jsum.coeff(i) == doctest::Approx((jf + jg).coeff(i)).epsilon(1e-14));
      CHECK(jprod.coeff(i) ==
            doctest::Approx((jf * jg).coeff(i)).epsilon(1e-13));
    }
    // chain rule: sin composed with g
    const Expression fog = Expression::parse("sin(y - x*y^2)", coords, {});
    const Jet jfog = fog.eval_jet(pt, {}, 4);
    const Jet jchain = sin(jg);
    for (int i = 0; i < jfog.size(); ++i)
      CHECK(jfog.coeff(i) == doctest::Approx(jchain.coeff(i)).epsilon(1e-13));
  }
}

TEST_CASE("division and reciprocal") {
  double p[1] = {0.7};
  std::span<const double> pt(p, 1);
  const Expression e = Expression::parse("(1 + x^2)/(2 - x)", {"x"}, {});
  const Expression num = Expression::parse("1 + x^2", {"x"}, {});
  const Expression den = Expression::parse("2 - x", {"x"}, {});
  const Jet q = e.eval_jet(pt, {}, 4);
  const Jet ref = num.eval_jet(pt, {}, 4) / den.eval_jet(pt, {}, 4);
  for (int i = 0; i < q.size(); ++i)
    CHECK(q.coeff(i) == doctest::Approx(ref.coeff(i)).epsilon(1e-14));
}

TEST_CASE("transcendentals against one-dimensional closed forms") {
  double x0 = 0.4;
  std::span<const double> pt(&x0, 1);
  const Jet x = Jet::variable(x0, 0, 1, 4);
  struct Row {
    Jet value;
    double d1, d2;
  };
  const double s = std::sin(x0), c = std::cos(x0);
  const double sec2 = 1.0 / (c * c);
  std::vector<Row> rows;
  rows.push_back({sin(x), c, -s});
  rows.push_back({cos(x), -s, -c});
  rows.push_back({tan(x), sec2, 2.0 * std::tan(x0) * sec2});
  rows.push_back({exp(x), std::exp(x0), std::exp(x0)});
  rows.push_back({log(x), 1.0 / x0, -1.0 / (x0 * x0)});
  rows.push_back({sqrt(x), 0.5 / std::sqrt(x0), -0.25 / std::pow(x0, 1.5)});
  rows.push_back({atan(x), 1.0 / (1.0 + x0 * x0),
                  -2.0 * x0 / ((1.0 + x0 * x0) * (1.0 + x0 * x0))});
  for (const Row& r : rows) {
    CHECK(r.value.partial(0) == doctest::Approx(r.d1).epsilon(1e-14));
    CHECK(r.value.partial2(0, 0) == doctest::Approx(r.d2).epsilon(1e-13));
  }
}

TEST_CASE("rational powers") {
  double x0 = 2.0;
  const Jet x = Jet::variable(x0, 0, 1, 3);
  const Jet r = pow(x, 1.5);
  CHECK(r.value() == doctest::Approx(std::pow(2.0, 1.5)));
  CHECK(r.partial(0) == doctest::Approx(1.5 * std::sqrt(2.0)));
  const Jet ni = pow_int(x, -2);
  CHECK(ni.value() == doctest::Approx(0.25));
  CHECK(ni.partial(0) == doctest::Approx(-2.0 / 8.0));
}

TEST_CASE("domain errors") {
  const Jet zero = Jet::constant(0.0, 1, 2);
  const Jet neg = Jet::constant(-1.0, 1, 2);
  CHECK_THROWS_AS(1.0 / zero, DomainError);
  CHECK_THROWS_AS(log(zero), DomainError);
  CHECK_THROWS_AS(log(neg), DomainError);
  CHECK_THROWS_AS(sqrt(neg), DomainError);
  CHECK_THROWS_AS(pow(neg, 0.5), DomainError);
  CHECK_THROWS_AS(pow_int(zero, -1), DomainError);
}

TEST_CASE("order and dim limits") {
  CHECK_THROWS_AS(Jet::constant(1.0, 5, 2), Error);
  CHECK_THROWS_AS(Jet::constant(1.0, 2, 5), Error);
  CHECK_THROWS_AS(Jet::constant(1.0, 0, 0), Error);
}

TEST_SUITE_END();
