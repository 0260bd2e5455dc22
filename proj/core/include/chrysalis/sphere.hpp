#pragma once

// Riemann-sphere point geometry. Stereographic projection is taken from the
// south pole S(0,0,-1), so 0 lands on the north pole and infinity on S.

#include <complex>
#include <numbers>

#include "chrysalis/wire.hpp"

namespace chrysalis::sphere {

/// A point of the extended complex plane. Infinity is a first-class value with
/// re = im = 0 stored alongside the flag.
class ExtendedComplex {
 public:
  constexpr ExtendedComplex() = default;
  constexpr ExtendedComplex(double re, double im = 0.0) : re_(re), im_(im) {}
  ExtendedComplex(std::complex<double> z) : re_(z.real()), im_(z.imag()) {}

  static constexpr ExtendedComplex infinity() {
    ExtendedComplex z;
    z.inf_ = true;
    return z;
  }

  constexpr double re() const { return re_; }
  constexpr double im() const { return im_; }
  constexpr bool is_infinity() const { return inf_; }
  std::complex<double> value() const { return {re_, im_}; }

  friend constexpr bool operator==(const ExtendedComplex&, const ExtendedComplex&) = default;

 private:
  double re_ = 0.0;
  double im_ = 0.0;
  bool inf_ = false;
};

struct SpherePoint {
  double xi = 0.0;
  double eta = 0.0;
  double zeta = 1.0;

  double dot(const SpherePoint& o) const { return xi * o.xi + eta * o.eta + zeta * o.zeta; }
  SpherePoint cross(const SpherePoint& o) const {
    return {eta * o.zeta - zeta * o.eta, zeta * o.xi - xi * o.zeta, xi * o.eta - eta * o.xi};
  }
  double norm() const;
  SpherePoint operator-() const { return {-xi, -eta, -zeta}; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

struct SphericalAngle {
  double radians = 0.0;
};

enum class Collinearity { FirstCase, SecondCase, NotCollinear };

SpherePoint project_to_sphere(const ExtendedComplex& z);
ExtendedComplex project_to_plane(const SpherePoint& p);

/// -1/conj(z); swaps 0 and infinity.
ExtendedComplex antipode(const ExtendedComplex& z);

/// Principal great-circle distance in [0, pi] between the sphere images.
SphericalAngle spherical_distance(const ExtendedComplex& z1, const ExtendedComplex& z2);
SphericalAngle spherical_distance(const SpherePoint& p1, const SpherePoint& p2);

/// Classifies whether z1, z2, z3 lie in index order on one spherical straight
/// line. Throws DegenerateInput when all three points coincide.
Collinearity collinearity_case(const ExtendedComplex& z1, const ExtendedComplex& z2,
                               const ExtendedComplex& z3, double tol);

void write(wire::Writer& w, const SpherePoint& p);
void write(wire::Writer& w, const ExtendedComplex& z);
SpherePoint read_sphere_point(wire::Reader& r);
ExtendedComplex read_extended_complex(wire::Reader& r);

}  // namespace chrysalis::sphere
