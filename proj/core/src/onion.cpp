#include "chrysalis/onion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chrysalis/error.hpp"

namespace chrysalis::onion {

namespace {

constexpr double kPi = std::numbers::pi;
const double kPi3 = kPi * kPi * kPi;
const double kPi6 = kPi3 * kPi3;

Complex ipow(Complex z, int n) {
  Complex r = 1.0;
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

Complex unit_branch(int branch, int degree) {
  const int k = ((branch % degree) + degree) % degree;
  if (degree == 4) {
    static constexpr Complex kUnits[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kUnits[k];
  }
  return std::polar(1.0, 2.0 * kPi * k / degree);
}

}  // namespace

Complex OnionExpr::operator()(Complex z) const { return constant + numerator * ipow(z, power) / kPi3; }

double OnionExpr::operator()(double x) const { return constant + numerator * std::pow(x, power) / kPi3; }

OnionExpr OnionExpr::derivative() const {
  if (power == 0) return {0.0, 0.0, 0};
  return {0.0, numerator * power, power - 1};
}

std::optional<OnionColor> OnionExpr::color() const {
  for (auto c : {OnionColor::Green, OnionColor::Red, OnionColor::Blue}) {
    if (*this == onion_expr(c)) return c;
  }
  return std::nullopt;
}

OnionExpr onion_expr(OnionColor color) {
  switch (color) {
    case OnionColor::Green: return {0.0, -1.0, 4};
    case OnionColor::Red: return {0.0, -4.0, 3};
    case OnionColor::Blue: return {kBlueConstant, -1.0, 4};
  }
  return {};
}

Complex onion_eval(OnionColor color, Complex z) { return onion_expr(color)(z); }
double onion_eval(OnionColor color, double x) { return onion_expr(color)(x); }

OnionExpr onion_derivative(OnionColor color) { return onion_expr(color).derivative(); }

std::vector<Complex> onion_roots(OnionColor color) {
  if (color != OnionColor::Blue) return {Complex{0.0, 0.0}};
  const double a = std::pow(kBlueConstant * kPi3, 0.25);
  std::vector<Complex> roots{{a, 0.0}, {0.0, a}, {-a, 0.0}, {0.0, -a}};
  std::sort(roots.begin(), roots.end(), [](Complex p, Complex q) {
    return p.real() != q.real() ? p.real() < q.real() : p.imag() < q.imag();
  });
  return roots;
}

int root_multiplicity(OnionColor color) {
  switch (color) {
    case OnionColor::Green: return 4;
    case OnionColor::Red: return 3;
    case OnionColor::Blue: return 1;
  }
  return 0;
}

double blue_inverse_constant() { return std::pow(kPi, 0.75) / std::pow(1000.0, 0.25); }

Complex onion_inverse(OnionColor color, double w, int branch) {
  switch (color) {
    case OnionColor::Blue: {
      const double inner = 12511.0 - 1000.0 * w;
      if (inner < 0.0) fail(ErrorCode::BranchDomain, "blue inverse needs w <= 12.511");
      return blue_inverse_constant() * std::pow(inner, 0.25) * unit_branch(branch, 4);
    }
    case OnionColor::Red:
      return std::cbrt(-kPi3 * w / 4.0) * unit_branch(branch, 3);
    case OnionColor::Green:
      if (w > 0.0) fail(ErrorCode::BranchDomain, "green inverse needs w <= 0");
      return std::pow(-kPi3 * w, 0.25) * unit_branch(branch, 4);
  }
  return {};
}

double quartic_discriminant(double a, double b, double c, double d, double e) {
  return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e - 128 * a * a * c * c * e * e +
         144 * a * a * c * d * d * e - 27 * a * a * d * d * d * d + 144 * a * b * b * c * e * e -
         6 * a * b * b * d * d * e - 80 * a * b * c * c * d * e + 18 * a * b * c * d * d * d +
         16 * a * c * c * c * c * e - 4 * a * c * c * c * d * d - 27 * b * b * b * b * e * e +
         18 * b * b * b * c * d * e - 4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e + b * b * c * c * d * d;
}

double cubic_discriminant(double a, double b, double c, double d) {
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

double onion_discriminant(OnionColor color) {
  const auto e = onion_expr(color);
  const double lead = e.numerator / kPi3;
  if (e.power == 4) return quartic_discriminant(lead, 0, 0, 0, e.constant);
  return cubic_discriminant(lead, 0, 0, e.constant);
}

double blue_antiderivative(double z) { return kBlueConstant * z - std::pow(z, 5) / (5.0 * kPi3); }

std::vector<double> red_green_intersections() {
  // g z^4 = r z^3 with g, r the numerators over the shared pi^3.
  const auto green = onion_expr(OnionColor::Green);
  const auto red = onion_expr(OnionColor::Red);
  return {0.0, red.numerator / green.numerator};
}

Complex gaussian_expr_complex(double theta) {
  const Complex i{0.0, 1.0};
  return i * std::exp(-i * theta) - i * std::exp(i * theta);
}

double gaussian_expr(double theta) { return gaussian_expr_complex(theta).real(); }

double gaussian_expr_degrees(double theta_deg) { return gaussian_expr(theta_deg * kPi / 180.0); }

CurvePoint gaussian_curve(double t) { return {0.5 * (4.0 * std::sin(t)), std::cos(t)}; }

double gaussian_speed(double t) {
  const double c = std::cos(t);
  const double s = std::sin(t);
  return std::sqrt(4.0 * c * c + s * s);
}

double curvature(double x0) {
  const double x6 = std::pow(x0, 6);
  return 12.0 * kPi6 * x0 * x0 / std::pow(16.0 * x6 + kPi6, 1.5);
}

double curvature_argmax() { return kPi / std::pow(56.0, 1.0 / 6.0); }
double curvature_max() { return curvature(curvature_argmax()); }

double quartic_center_coeff() { return 7.0 / (3.0 * kPi3); }
double inverse_square_center_coeff() { return kPi3 / 12.0; }

OsculatingCircle osculating_circle(double x0) {
  if (x0 == 0.0) fail(ErrorCode::InfiniteRadius, "curvature vanishes at x0 = 0");
  const double x6 = std::pow(x0, 6);
  const double cx = 2.0 * x0 * (kPi6 - 8.0 * x6) / (3.0 * kPi6);
  const double cy = kBlueConstant - quartic_center_coeff() * std::pow(x0, 4) -
                    inverse_square_center_coeff() / (x0 * x0);
  const double radius = std::pow(16.0 * x6 + kPi6, 1.5) / (12.0 * kPi6 * x0 * x0);
  return {cx, cy, radius, x0};
}

double geodesic_residual(double x, double y, double x0) {
  const auto c = osculating_circle(x0);
  const double dx = x - c.center_x;
  const double dy = y - c.center_y;
  return dy * dy + dx * dx - c.radius * c.radius;
}

double geodesic_rhs(double x0) {
  if (x0 == 0.0) fail(ErrorCode::InfiniteRadius, "curvature vanishes at x0 = 0");
  const double base = kPi6 + 16.0 * std::pow(x0, 6);
  return base * base * base / (144.0 * kPi6 * kPi6 * std::pow(x0, 4));
}

double geodesic_integrand(double x) {
  const double x2 = x * x;
  const double x6 = std::pow(x, 6);
  const double x12 = x6 * x6;
  const double inner = 32.0 * kPi6 * x6 * (-32.0 + x2) + kPi6 * kPi6 * (4.0 + x2) + 256.0 * x12 * (256.0 + x2);
  const double radicand = x2 * inner;
  if (radicand < 0.0) fail(ErrorCode::NumericalDomain, "negative radicand in geodesic integrand");
  const double den = kPi6 + 16.0 * x6;
  const double den2 = den * den;
  // sqrt(N / den^8) = sqrt(N) / den^4, which avoids overflowing den^8.
  return 24.0 * kPi6 * std::sqrt(radicand) / (den2 * den2);
}

Complex parent_X(Complex x) {
  const Complex i{0.0, 1.0};
  return std::exp(-i * x) - 2.0 * i;
}

Complex parent_X_root(int n) { return {2.0 * kPi * n - kPi / 2.0, std::log(2.0)}; }

Complex parent_Y(Complex y) {
  const Complex i{0.0, 1.0};
  return 2.0 * std::exp(-y * kPi * i);
}

ParentSample sample_parent(ParentAxis axis, double argument) {
  return {axis, argument, axis == ParentAxis::X ? parent_X(argument) : parent_Y(argument)};
}

double system_residual(double x, double y, double z, double theta) {
  return 2.0 * std::sin(theta) + x + kBlueConstant * y - 2.0 * std::pow(z, 4) / kPi3 - 4.0 * z * z * z / kPi3;
}

double nonparametric_average(double x, double y, double z) {
  return 0.25 * (x + kBlueConstant * y - 0.0645 * std::pow(z, 4) - 0.129 * z * z * z);
}

double alt_expression(double n, double x) { return kBlueConstant - std::pow(n, 4) * x / kPi3; }

}  // namespace chrysalis::onion
