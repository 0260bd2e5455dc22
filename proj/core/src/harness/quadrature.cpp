#include "chrysalis/harness/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "chrysalis/error.hpp"

namespace chrysalis::harness {

namespace {

struct Simpson {
  const std::function<double(double)>& f;
  double tol_per_width;
  int min_depth;
  QuadratureResult out;

  double eval(double x) {
    ++out.evaluations;
    const double y = f(x);
    if (!std::isfinite(y)) fail(ErrorCode::NumericalDomain, "integrand is not finite");
    return y;
  }

  double panel(double a, double b, double fa, double fm, double fb, double whole, int level) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    if (!(a < lm && lm < m && m < rm && rm < b)) fail(ErrorCode::ConvergenceFailure, "panel width underflow");
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (level >= min_depth && std::abs(delta) <= 15.0 * tol_per_width * (b - a)) {
      out.abs_error_estimate += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (level == kMaxQuadratureDepth) fail(ErrorCode::ConvergenceFailure, "adaptive Simpson exceeded depth 40");
    return panel(a, m, fa, flm, fm, left, level + 1) + panel(m, b, fm, frm, fb, right, level + 1);
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                           const std::vector<double>& splits, int min_depth) {
  if (!(a < b)) fail(ErrorCode::DegenerateInput, "integration bounds must satisfy a < b");
  if (!(tol > 0.0)) fail(ErrorCode::DegenerateInput, "quadrature tolerance must be positive");
  std::vector<double> knots{a};
  for (double s : splits)
    if (a < s && s < b) knots.push_back(s);
  knots.push_back(b);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  Simpson s{f, tol / (b - a), std::clamp(min_depth, 0, kMaxQuadratureDepth), {}};
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const double lo = knots[k];
    const double hi = knots[k + 1];
    const double flo = s.eval(lo);
    const double fmid = s.eval(0.5 * (lo + hi));
    const double fhi = s.eval(hi);
    s.out.value += s.panel(lo, hi, flo, fmid, fhi, (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi), 0);
  }
  return s.out;
}

}  // namespace chrysalis::harness
