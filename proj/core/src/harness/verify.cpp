#include "chrysalis/harness/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chrysalis/harness/quadrature.hpp"
#include "chrysalis/lattice.hpp"
#include "chrysalis/onion.hpp"
#include "chrysalis/protocol/keys.hpp"

namespace chrysalis::harness {

using onion::OnionColor;

bool VerificationReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.pass; });
}

double blue_root_newton(double x0) {
  const auto blue = onion::onion_expr(OnionColor::Blue);
  const auto slope = blue.derivative();
  double x = x0;
  for (int i = 0; i < 100; ++i) {
    const double step = blue(x) / slope(x);
    x -= step;
    if (std::abs(step) <= 1e-15 * std::abs(x)) return x;
  }
  fail(ErrorCode::ConvergenceFailure, "Newton iteration for the Blue root did not settle");
}

QuadratureResult gaussian_arc_length() { return integrate(onion::gaussian_speed, 0.0, 2.0 * std::numbers::pi, 1e-11); }

QuadratureResult geodesic_arc_length() { return integrate(onion::geodesic_integrand, -100.0, 100.0, 1e-13, {0.0}); }

QuadratureResult blue_definite_integral() {
  const double a = blue_root_newton();
  return integrate([](double x) { return onion::onion_eval(OnionColor::Blue, x); }, -a, a, 1e-10);
}

VerificationReport verify_suite() {
  VerificationReport report;
  auto row = [&](std::string name, double printed, double computed, double tol) {
    const double diff = std::abs(computed - printed);
    report.rows.push_back({std::move(name), printed, computed, diff, tol, diff <= tol});
  };

  const double root = blue_root_newton();
  row("gaussian arc length", 9.68845, gaussian_arc_length().value, 1e-4);
  row("geodesic arc", 0.000172061, geodesic_arc_length().value, 2e-7);
  row("blue integral", 88.8377, blue_definite_integral().value, 1e-3);
  row("blue integral closed form", 88.8377, onion::blue_antiderivative(root) - onion::blue_antiderivative(-root),
      1e-3);
  row("blue roots", 4.43798, root, 1e-5);
  row("blue inverse constant", 0.419626, onion::blue_inverse_constant(), 1e-6);
  row("blue discriminant magnitude", 16.8177, std::abs(onion::onion_discriminant(OnionColor::Blue)), 1e-3);
  row("osculating quartic coefficient", onion::kPrintedQuarticCoeff, onion::quartic_center_coeff(), 1e-7);
  row("osculating inverse-square coefficient", onion::kPrintedInverseSquareCoeff,
      onion::inverse_square_center_coeff(), 1e-5);

  const auto hits = onion::red_green_intersections();
  row("red/green intersection 0", 0.0, hits.at(0), 0.0);
  row("red/green intersection 4", 4.0, hits.at(1), 0.0);

  const auto counts = protocol::keyspace_counts();
  row("eight-element permutations", 40320.0, static_cast<double>(counts.eight_element), 0.0);
  row("six-element permutations", 720.0, static_cast<double>(counts.six_element), 0.0);
  row("perm(216,4)", 2116828080.0, static_cast<double>(counts.clique_permutations), 0.0);

  double worst = 0.0;
  for (int n = -2; n <= 2; ++n) worst = std::max(worst, std::abs(onion::parent_X(onion::parent_X_root(n))));
  row("X root formula", 0.0, worst, 1e-12);

  row("N(1)", 5.0, static_cast<double>(lattice::count_lattice_points(1.0).count), 0.0);
  row("N(2)", 13.0, static_cast<double>(lattice::count_lattice_points(2.0).count), 0.0);
  row("N(3)", 29.0, static_cast<double>(lattice::count_lattice_points(3.0).count), 0.0);
  return report;
}

}  // namespace chrysalis::harness
