#include "horizon/data_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace horizon {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw ParseError(0, "a well-formed initial data document", what);
}

}  // namespace

InitialDataSet parse_initial_data(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, "valid JSON",
                     "JSON parse error at byte " + std::to_string(e.byte) +
                         ": " + e.what());
  }

  if (!j.is_object()) bad("top level must be an object");
  if (!j.contains("coords") || !j["coords"].is_array() || j["coords"].empty())
    bad("'coords' must be a non-empty array");

  Chart chart;
  for (const auto& c : j["coords"]) {
    if (!c.contains("name") || !c.contains("min") || !c.contains("max"))
      bad("each coordinate needs name/min/max");
    chart.coords.push_back(c["name"].get<std::string>());
    chart.lower.push_back(c["min"].get<double>());
    chart.upper.push_back(c["max"].get<double>());
  }
  if (j.contains("params")) {
    if (!j["params"].is_object()) bad("'params' must be an object");
    for (const auto& [k, v] : j["params"].items()) {
      chart.param_names.push_back(k);
      chart.param_values.push_back(v.get<double>());
    }
  }
  chart.check_valid();
  const int n = chart.dim();

  if (!j.contains("sigma") || !j["sigma"].is_array() ||
      static_cast<int>(j["sigma"].size()) != n)
    bad("'sigma' must be an " + std::to_string(n) + "x" + std::to_string(n) +
        " matrix of expression strings");
  std::vector<std::vector<std::string>> sig(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = j["sigma"][i];
    if (!row.is_array()) bad("'sigma' rows must be arrays");
    for (const auto& cell : row) sig[i].push_back(cell.get<std::string>());
  }

  if (!j.contains("V") || !j["V"].is_array() ||
      static_cast<int>(j["V"].size()) != n)
    bad("'V' must have one component per coordinate");
  std::vector<std::string> vcomps;
  for (const auto& cell : j["V"]) vcomps.push_back(cell.get<std::string>());

  // Accept a full matrix or an upper triangle (empty strings below).
  std::vector<std::vector<Expression>> comps(n, std::vector<Expression>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const std::string* src = nullptr;
      if (k < static_cast<int>(sig[i].size()) && !sig[i][k].empty())
        src = &sig[i][k];
      else if (i < static_cast<int>(sig[k].size()) && !sig[k][i].empty())
        src = &sig[k][i];
      else
        bad("missing sigma component (" + std::to_string(i) + "," +
            std::to_string(k) + ")");
      comps[i][k] = Expression::parse(*src, chart.coords, chart.param_names);
    }

  InitialDataSet data;
  data.chart = chart;
  data.sigma = MetricField(chart, Signature::kRiemannian, std::move(comps));
  data.V = VectorField::from_strings(chart, vcomps);
  data.label = j.value("label", std::string("unnamed"));
  return data;
}

InitialDataSet load_initial_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_initial_data(ss.str());
}

}  // namespace horizon
