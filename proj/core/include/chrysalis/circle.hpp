#pragma once

// Circles, lines and point circles of the extended plane as 2x2 Hermitian
// matrices [[A, B], [conj(B), D]], i.e. the zero set of
//   A z conj(z) + B z + conj(B) conj(z) + D = 0.

#include <complex>

#include "chrysalis/sphere.hpp"
#include "chrysalis/wire.hpp"

namespace chrysalis::circle {

using Complex = std::complex<double>;

class HermitianCircle {
 public:
  /// Throws DegenerateInput when A, B and D are all zero.
  HermitianCircle(double a, Complex b, double d);

  double A() const { return a_; }
  Complex B() const { return b_; }
  Complex C() const { return std::conj(b_); }
  double D() const { return d_; }

  /// Value of the defining form at z (always real).
  double evaluate(Complex z) const;

  /// Canonical representative: A = 1 for circles; A = 0 and |B| = 1 with the
  /// first nonzero component of B positive for lines; D = 1 when A = B = 0.
  HermitianCircle normalized() const;
  HermitianCircle scaled(double lambda) const;

  /// Same zero set up to real scaling, compared on canonical forms.
  bool same_circle(const HermitianCircle& other, double tol = 1e-12) const;

 private:
  double a_;
  Complex b_;
  double d_;
};

enum class CircleClass { RealCircle, PointCircle, ImaginaryCircle, StraightLine, Degenerate };

struct CenterRadius {
  Complex center;
  double rho_sq;  // negative for imaginary circles
};

struct PencilCoefficients {
  double lambda1;
  double lambda2;
};

struct CrossRatio {
  Complex value;
  bool concyclic;
};

HermitianCircle circle_from_center_radius(Complex gamma, double rho_sq);

/// A D - |B|^2.
double discriminant(const HermitianCircle& c);

/// `tol` is an absolute window around zero for the sign of the discriminant.
CircleClass classify(const HermitianCircle& c, double tol = 0.0);

CenterRadius center_radius(const HermitianCircle& c);

/// Mixed discriminant (A1 D2 + A2 D1 - B1 C2 - B2 C1) / 2.
double delta12(const HermitianCircle& c1, const HermitianCircle& c2);

bool orthogonal(const HermitianCircle& c1, const HermitianCircle& c2, double tol);

/// cos of the angle between two positively oriented real circles,
/// -delta12 / sqrt(delta1 delta2). +1 is internal tangency, -1 external.
double cos_angle(const HermitianCircle& c1, const HermitianCircle& c2);

HermitianCircle pencil_member(const HermitianCircle& c1, const HermitianCircle& c2,
                              PencilCoefficients lambda);

sphere::ExtendedComplex invert_point(const HermitianCircle& mirror, const sphere::ExtendedComplex& z);

/// Image of `c` under inversion in the real circle `mirror`, normalized.
HermitianCircle invert_circle(const HermitianCircle& mirror, const HermitianCircle& c);

/// (z1 - z3)(z2 - z4) / ((z1 - z4)(z2 - z3)); factors with an infinite point
/// cancel in the limit. Throws DegenerateInput on repeated points.
CrossRatio cross_ratio(const sphere::ExtendedComplex& z1, const sphere::ExtendedComplex& z2,
                       const sphere::ExtendedComplex& z3, const sphere::ExtendedComplex& z4);

void write(wire::Writer& w, const HermitianCircle& c);
HermitianCircle read_circle(wire::Reader& r);

}  // namespace chrysalis::circle
