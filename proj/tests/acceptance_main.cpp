// Acceptance suite: runs the full verification with its pinned defaults and
// prints one PASS/FAIL line per criterion, then per-check lines for anything
// that failed. Exit status 0 iff every criterion passes.

#include <cmath>
#include <cstdio>
#include <map>

#include "horizon/verification.hpp"

int main() {
  using namespace horizon;

  const char* kCriteria[] = {
      "",
      "surface gravity reproduction (closed-form and induced paths)",
      "vacuum oracle: max relative Ricci residual on interior grids",
      "induced-data oracle: induce_numeric vs closed form",
      "first-derivative theorem at m=1: q1 vs numeric L_t g",
      "remainder order: first-order jet leaves an O(t^2) residual",
      "gauge identities: L_t^m g(d_t,.), [W,d_t], nabla_t W, nabla_t A",
      "structural identities: reconstruction, omega(V), L_V omega, kernel",
      "diffeomorphism equivariance of q1",
      "engine: jets vs differences, Riemann symmetries, null drift, wall time",
  };

  VerifySummary summary;
  try {
    summary = run_verification(VerifyOptions{});
  } catch (const std::exception& e) {
    std::printf("[FAIL] suite aborted: %s\n", e.what());
    return 1;
  }

  std::map<int, std::pair<int, int>> tally;  // criterion -> (pass, fail)
  std::map<int, double> worst_margin;        // residual / threshold
  for (const CheckResult& c : summary.checks) {
    const int k = criterion_of(c.id);
    auto& [pass, fail] = tally[k];
    (c.pass ? pass : fail) += 1;
    if (c.threshold > 0.0 && std::isfinite(c.residual)) {
      auto [it, inserted] = worst_margin.try_emplace(k, 0.0);
      it->second = std::max(it->second, c.residual / c.threshold);
    }
  }

  bool all = summary.all_pass;  // also covers aborted jobs outside 1..9
  for (int k = 1; k <= 9; ++k) {
    const auto it = tally.find(k);
    const int pass = (it == tally.end()) ? 0 : it->second.first;
    const int fail = (it == tally.end()) ? 0 : it->second.second;
    const bool ok = (fail == 0) && (pass > 0);
    all = all && ok;
    std::printf("[%s] criterion %d: %s (%d checks, worst residual/threshold "
                "%.2e)\n",
                ok ? "PASS" : "FAIL", k, kCriteria[k], pass + fail,
                worst_margin.count(k) ? worst_margin[k] : 0.0);
  }
  for (const CheckResult& c : summary.checks)
    if (!c.pass)
      std::printf("  failed: %-40s residual %.3e threshold %.3e (%s)\n",
                  c.id.c_str(), c.residual, c.threshold, c.detail.c_str());

  std::printf("%d checks in %.1f s: %s\n",
              static_cast<int>(summary.checks.size()), summary.wall_seconds,
              all ? "all criteria pass" : "FAILURES PRESENT");
  return all ? 0 : 1;
}
