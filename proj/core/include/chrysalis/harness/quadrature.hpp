#pragma once

#include <functional>
#include <vector>

namespace chrysalis::harness {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

inline constexpr int kMaxQuadratureDepth = 40;

/// Adaptive Simpson on [a, b], split first at the interior points `splits`.
/// A panel is accepted once its local error estimate drops below
/// tol * width / (b - a); every piece is bisected at least `min_depth` times
/// so that narrow features inside wide intervals are sampled. Throws
/// DegenerateInput for a >= b or tol <= 0, and ConvergenceFailure past depth 40.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                           const std::vector<double>& splits = {}, int min_depth = 6);

}  // namespace chrysalis::harness
