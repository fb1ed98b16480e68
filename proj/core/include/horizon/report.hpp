#ifndef HORIZON_REPORT_HPP
#define HORIZON_REPORT_HPP

#include <string>
#include <vector>

namespace horizon {

/// One verification check: a stable id, the measured residual, the threshold
/// it is held against, and the verdict.
struct CheckResult {
  std::string id;
  std::string detail;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Flat numeric table with named columns, for plot-ready output.
struct ResidualTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string checks_to_json(const std::vector<CheckResult>& checks,
                           double wall_seconds);
std::string checks_to_csv(const std::vector<CheckResult>& checks);
std::string table_to_json(const std::string& name, const ResidualTable& table);
std::string table_to_csv(const ResidualTable& table);

/// Writes to the path, or to stdout when path is empty.
void emit_report(const std::string& path, const std::string& content);

}  // namespace horizon

#endif
