#ifndef HORIZON_NUMERICS_HPP
#define HORIZON_NUMERICS_HPP

#include <vector>

namespace horizon {

/// Finite-difference weights on arbitrary nodes (Fornberg's recurrence):
/// returns w with sum_i w[i] f(nodes[i]) ~ f^(m)(x0).
std::vector<double> fd_weights(double x0, const std::vector<double>& nodes,
                               int m);

/// Least-squares slope of log(y) against log(x); x and y must be positive.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace horizon

#endif
