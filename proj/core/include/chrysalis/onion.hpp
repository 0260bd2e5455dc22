#pragma once

// The three onion functions, their calculus, the Gaussian parametric curve,
// the osculating-circle family of the blue curve and the parent functions.

#include <complex>
#include <numbers>
#include <optional>
#include <vector>

namespace chrysalis::onion {

using Complex = std::complex<double>;

enum class OnionColor { Green, Red, Blue };

inline constexpr double kBlueConstant = 12.511;

/// constant + numerator * z^power / pi^3. Every onion and each of its
/// derivatives has this shape; keeping the pi^3 denominator symbolic lets
/// intersections come out as exact ratios of the numerators.
struct OnionExpr {
  double constant = 0.0;
  double numerator = 0.0;
  int power = 0;

  Complex operator()(Complex z) const;
  double operator()(double x) const;
  OnionExpr derivative() const;
  /// The onion color this expression is, if any.
  std::optional<OnionColor> color() const;

  friend bool operator==(const OnionExpr&, const OnionExpr&) = default;
};

OnionExpr onion_expr(OnionColor color);
Complex onion_eval(OnionColor color, Complex z);
double onion_eval(OnionColor color, double x);

/// Green' = Red and Blue' = Red; Red' = -12 z^2 / pi^3 has no color.
OnionExpr onion_derivative(OnionColor color);

/// Distinct roots sorted by (Re, Im).
std::vector<Complex> onion_roots(OnionColor color);
int root_multiplicity(OnionColor color);

/// Inverse branch `branch` (taken modulo the degree, counting
/// counterclockwise from the principal real branch). Throws BranchDomain when
/// the real branch does not exist: w > 12.511 for Blue, w > 0 for Green.
Complex onion_inverse(OnionColor color, double w, int branch = 0);

/// Scale in Blue^-1(w) = +-c (12511 - 1000 w)^(1/4); c = pi^(3/4) / 1000^(1/4).
double blue_inverse_constant();

/// Polynomial discriminant of the onion (standard sign convention: Blue is
/// negative because it has two real and two non-real roots).
double onion_discriminant(OnionColor color);
double quartic_discriminant(double a, double b, double c, double d, double e);
double cubic_discriminant(double a, double b, double c, double d);

/// 12.511 z - z^5 / (5 pi^3).
double blue_antiderivative(double z);

/// Real solutions of Green(z) = Red(z); exact ratio of numerators.
std::vector<double> red_green_intersections();

// Gaussian expression i e^{-i theta} - i e^{i theta} = 2 sin(theta).
Complex gaussian_expr_complex(double theta);
double gaussian_expr(double theta);
double gaussian_expr_degrees(double theta_deg);

struct CurvePoint {
  double x;
  double y;
};

/// (2 sin t, cos t).
CurvePoint gaussian_curve(double t);
double gaussian_speed(double t);

/// Curvature 12 pi^6 x^2 / (16 x^6 + pi^6)^(3/2) of the blue curve over the reals.
double curvature(double x0);
/// pi / 56^(1/6), where the curvature peaks on x > 0.
double curvature_argmax();
double curvature_max();

struct OsculatingCircle {
  double center_x;
  double center_y;
  double radius;
  double at_x0;
};

// Rounded forms of 7/(3 pi^3) and pi^3/12 that appear in the center formula.
inline constexpr double kPrintedQuarticCoeff = 0.0752536;
inline constexpr double kPrintedInverseSquareCoeff = 2.58386;
double quartic_center_coeff();        // 7 / (3 pi^3)
double inverse_square_center_coeff(); // pi^3 / 12

/// Throws InfiniteRadius at x0 = 0.
OsculatingCircle osculating_circle(double x0);

/// (y - yc)^2 + (x - xc)^2 - R^2. The printed geodesic equation drops the
/// square on the x term; it is restored here so the right-hand side matches R^2.
double geodesic_residual(double x, double y, double x0);
/// (pi^6 + 16 x0^6)^3 / (144 pi^12 x0^4).
double geodesic_rhs(double x0);

/// 24 pi^6 sqrt(x^2 (32 pi^6 x^6 (x^2 - 32) + pi^12 (4 + x^2) + 256 x^12 (256 + x^2)) / (pi^6 + 16 x^6)^8).
double geodesic_integrand(double x);

// Parent functions.
enum class ParentAxis { X, Y };

struct ParentSample {
  ParentAxis axis;
  double argument;
  Complex value;
};

inline constexpr double kParentXPeriod = 2.0 * std::numbers::pi;
inline constexpr double kParentYPeriod = 2.0;
/// The "universal constant" K attached to both parent series is infinite; it
/// carries no numeric content and is kept only as a flag.
inline constexpr bool kUniversalConstantInfinite = true;

/// e^{-i x} - 2i.
Complex parent_X(Complex x);
/// 2 pi n - pi / 2 + i ln 2.
Complex parent_X_root(int n);
/// 2 e^{-y pi i}.
Complex parent_Y(Complex y);
ParentSample sample_parent(ParentAxis axis, double argument);

/// 2 sin(theta) + x + 12.511 y - 2 z^4 / pi^3 - 4 z^3 / pi^3.
double system_residual(double x, double y, double z, double theta);
/// (x + 12.511 y - 0.0645 z^4 - 0.129 z^3) / 4.
double nonparametric_average(double x, double y, double z);
/// 12.511 - n^4 x / pi^3.
double alt_expression(double n, double x);

}  // namespace chrysalis::onion
