#pragma once

#include <string>
#include <vector>

#include "chrysalis/harness/quadrature.hpp"

namespace chrysalis::harness {

struct VerificationRow {
  std::string name;
  double printed_value;
  double computed;
  double abs_diff;
  double tolerance;
  bool pass;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  bool all_pass() const;
};

/// Root of the Blue onion by Newton's method from x0.
double blue_root_newton(double x0 = 4.0);
QuadratureResult gaussian_arc_length();
QuadratureResult geodesic_arc_length();
/// The Blue onion between its two real roots.
QuadratureResult blue_definite_integral();

/// Recomputes every printed constant and compares it with its printed value.
VerificationReport verify_suite();

}  // namespace chrysalis::harness
