#include <doctest.h>

#include <cmath>

#include "horizon/data_io.hpp"
#include "horizon/report.hpp"
#include "horizon/verification.hpp"

using namespace horizon;

namespace {

const char* kMisnerDoc = R"({
  "label": "misner torus data",
  "coords": [
    {"name": "x", "min": -1.0, "max": 1.0},
    {"name": "y", "min": -1.0, "max": 1.0},
    {"name": "z", "min": -1.0, "max": 1.0}
  ],
  "params": {},
  "sigma": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
  "V": ["1", "0", "0"]
})";

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("initial data file loads and validates") {
  const InitialDataSet data = parse_initial_data(kMisnerDoc);
  CHECK(data.label == "misner torus data");
  CHECK(data.chart.dim() == 3);
  ValidationOptions vo;
  vo.grid_per_axis = 5;
  const ValidationReport rep = validate(data, vo);
  CHECK(rep.passed());
  CHECK(rep.kappa == doctest::Approx(1.0));
}

TEST_CASE("upper-triangle sigma is accepted") {
  const char* doc = R"({
    "coords": [{"name": "x", "min": -1, "max": 1},
               {"name": "y", "min": -1, "max": 1}],
    "sigma": [["2", "x"], ["", "2"]],
    "V": ["1", "0"]
  })";
  const InitialDataSet data = parse_initial_data(doc);
  const Mat s = data.sigma.eval(Vec{0.5, 0.0});
  CHECK(s(0, 1) == 0.5);
  CHECK(s(1, 0) == 0.5);
}

TEST_CASE("malformed documents raise ParseError") {
  CHECK_THROWS_AS(parse_initial_data("{"), ParseError);
  CHECK_THROWS_AS(parse_initial_data("[1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_initial_data(R"({"coords": []})"), ParseError);
  // a bad expression carries its offset through
  const char* bad = R"({
    "coords": [{"name": "x", "min": -1, "max": 1}],
    "sigma": [["x^"]],
    "V": ["1"]
  })";
  CHECK_THROWS_AS(parse_initial_data(bad), ParseError);
}

TEST_CASE("report writers are deterministic") {
  std::vector<CheckResult> checks;
  checks.push_back({"a.one", "first", 1.25e-9, 1e-8, true});
  checks.push_back({"b.two", "second", 3.0, 1.0, false});
  CHECK(checks_to_json(checks, 1.0) == checks_to_json(checks, 1.0));
  const std::string csv = checks_to_csv(checks);
  CHECK(csv == checks_to_csv(checks));
  CHECK(csv.find("a.one,1.25e-09,1e-08,1") != std::string::npos);
  CHECK(csv.find("b.two,3,1,0") != std::string::npos);

  ResidualTable t;
  t.columns = {"theta", "q1_VV"};
  t.rows = {{0.5, -0.5}, {1.0, -0.5}};
  CHECK(table_to_csv(t) == "theta,q1_VV\n0.5,-0.5\n1,-0.5\n");
  CHECK(table_to_json("q1", t) == table_to_json("q1", t));
}

TEST_CASE("single-entry verification is deterministic and passes") {
  VerifyOptions o;
  o.entries = {"misner"};
  const VerifySummary a = run_verification(o);
  const VerifySummary b = run_verification(o);
  CHECK(a.all_pass);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    const bool both_nan = std::isnan(a.checks[i].residual) &&
                          std::isnan(b.checks[i].residual);
    CHECK((both_nan || a.checks[i].residual == b.checks[i].residual));
  }
}

TEST_SUITE_END();
