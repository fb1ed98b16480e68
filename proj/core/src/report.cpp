#include "horizon/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "horizon/errors.hpp"

namespace horizon {

namespace {

using nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace

std::string checks_to_json(const std::vector<CheckResult>& checks,
                           double wall_seconds) {
  ordered_json root;
  root["wall_seconds"] = wall_seconds;
  bool all = true;
  ordered_json arr = ordered_json::array();
  for (const CheckResult& c : checks) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["detail"] = c.detail;
    jc["residual"] = c.residual;
    jc["threshold"] = c.threshold;
    jc["pass"] = c.pass;
    arr.push_back(jc);
    all = all && c.pass;
  }
  root["all_pass"] = all;
  root["checks"] = arr;
  return root.dump(2) + "\n";
}

std::string checks_to_csv(const std::vector<CheckResult>& checks) {
  std::string out = "id,residual,threshold,pass\n";
  for (const CheckResult& c : checks)
    out += c.id + "," + fmt(c.residual) + "," + fmt(c.threshold) + "," +
           (c.pass ? "1" : "0") + "\n";
  return out;
}

std::string table_to_json(const std::string& name, const ResidualTable& table) {
  ordered_json root;
  root["name"] = name;
  root["columns"] = table.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& r : table.rows) rows.push_back(r);
  root["rows"] = rows;
  return root.dump(2) + "\n";
}

std::string table_to_csv(const ResidualTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out += (i ? "," : "") + table.columns[i];
  out += "\n";
  for (const auto& r : table.rows) {
    for (std::size_t i = 0; i < r.size(); ++i)
      out += (i ? "," : "") + fmt(r[i]);
    out += "\n";
  }
  return out;
}

void emit_report(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write to '" + path + "'");
  out << content;
}

}  // namespace horizon
