#include "chrysalis/sphere.hpp"

#include <cmath>

namespace chrysalis::sphere {

double SpherePoint::norm() const { return std::sqrt(dot(*this)); }

SpherePoint project_to_sphere(const ExtendedComplex& z) {
  if (z.is_infinity()) return {0.0, 0.0, -1.0};
  const double x = z.re();
  const double y = z.im();
  const double r2 = x * x + y * y;
  const double den = r2 + 1.0;
  return {2.0 * x / den, 2.0 * y / den, (1.0 - r2) / den};
}

ExtendedComplex project_to_plane(const SpherePoint& p) {
  // Near the south pole 1 + zeta cancels; the equivalent (1 - zeta)/(xi - i eta)
  // form stays accurate there.
  if (p.zeta >= 0.0) {
    const double den = 1.0 + p.zeta;
    return {p.xi / den, p.eta / den};
  }
  const double planar = p.xi * p.xi + p.eta * p.eta;
  if (planar == 0.0) return ExtendedComplex::infinity();
  const double scale = (1.0 - p.zeta) / planar;
  return {p.xi * scale, p.eta * scale};
}

ExtendedComplex antipode(const ExtendedComplex& z) {
  if (z.is_infinity()) return {0.0, 0.0};
  const double r2 = z.re() * z.re() + z.im() * z.im();
  if (r2 == 0.0) return ExtendedComplex::infinity();
  return {-z.re() / r2, -z.im() / r2};
}

SphericalAngle spherical_distance(const SpherePoint& p1, const SpherePoint& p2) {
  // atan2 of |cross| and dot equals arccos(dot) but keeps full precision near 0 and pi.
  return {std::atan2(p1.cross(p2).norm(), p1.dot(p2))};
}

SphericalAngle spherical_distance(const ExtendedComplex& z1, const ExtendedComplex& z2) {
  return spherical_distance(project_to_sphere(z1), project_to_sphere(z2));
}

Collinearity collinearity_case(const ExtendedComplex& z1, const ExtendedComplex& z2,
                               const ExtendedComplex& z3, double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::DegenerateInput, "collinearity tolerance must be positive");
  const double d12 = spherical_distance(z1, z2).radians;
  const double d23 = spherical_distance(z2, z3).radians;
  const double d13 = spherical_distance(z1, z3).radians;
  if (d12 <= tol && d23 <= tol && d13 <= tol) fail(ErrorCode::DegenerateInput, "coincident triple");

  constexpr double pi = std::numbers::pi;
  const double sum = d12 + d23;
  if (sum < d13 - tol || sum > 2.0 * pi - d13 + tol) {
    fail(ErrorCode::NumericalDomain, "spherical triangle inequality chain violated");
  }
  if (std::abs(sum - d13) <= tol && sum <= pi + tol) return Collinearity::FirstCase;
  if (std::abs(sum - (2.0 * pi - d13)) <= tol && sum >= pi - tol) return Collinearity::SecondCase;
  return Collinearity::NotCollinear;
}

void write(wire::Writer& w, const SpherePoint& p) {
  w.f64(p.xi);
  w.f64(p.eta);
  w.f64(p.zeta);
}

void write(wire::Writer& w, const ExtendedComplex& z) {
  w.f64(z.re());
  w.f64(z.im());
  w.u8(z.is_infinity() ? 1 : 0);
}

SpherePoint read_sphere_point(wire::Reader& r) {
  SpherePoint p;
  p.xi = r.f64();
  p.eta = r.f64();
  p.zeta = r.f64();
  return p;
}

ExtendedComplex read_extended_complex(wire::Reader& r) {
  const double re = r.f64();
  const double im = r.f64();
  const auto flag = r.u8();
  if (flag > 1) fail(ErrorCode::FrameCorrupt, "bad infinity flag");
  if (flag == 1) {
    if (re != 0.0 || im != 0.0) fail(ErrorCode::FrameCorrupt, "non-canonical infinity");
    return ExtendedComplex::infinity();
  }
  return {re, im};
}

}  // namespace chrysalis::sphere
