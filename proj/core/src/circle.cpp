#include "chrysalis/circle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace chrysalis::circle {

using sphere::ExtendedComplex;

HermitianCircle::HermitianCircle(double a, Complex b, double d) : a_(a), b_(b), d_(d) {
  if (a == 0.0 && b == Complex{} && d == 0.0) fail(ErrorCode::DegenerateInput, "all-zero Hermitian matrix");
}

double HermitianCircle::evaluate(Complex z) const { return a_ * std::norm(z) + 2.0 * std::real(b_ * z) + d_; }

HermitianCircle HermitianCircle::normalized() const {
  if (a_ != 0.0) return scaled(1.0 / a_);
  if (b_ != Complex{}) {
    double s = 1.0 / std::abs(b_);
    if (b_.real() < 0.0 || (b_.real() == 0.0 && b_.imag() < 0.0)) s = -s;
    return scaled(s);
  }
  return scaled(1.0 / d_);
}

HermitianCircle HermitianCircle::scaled(double lambda) const {
  if (lambda == 0.0) fail(ErrorCode::DegenerateInput, "zero scale factor");
  return {a_ * lambda, b_ * lambda, d_ * lambda};
}

bool HermitianCircle::same_circle(const HermitianCircle& other, double tol) const {
  const auto p = normalized();
  const auto q = other.normalized();
  const auto close = [tol](double x, double y) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(y)); };
  return close(p.A(), q.A()) && close(p.B().real(), q.B().real()) && close(p.B().imag(), q.B().imag()) &&
         close(p.D(), q.D());
}

HermitianCircle circle_from_center_radius(Complex gamma, double rho_sq) {
  return {1.0, -std::conj(gamma), std::norm(gamma) - rho_sq};
}

double discriminant(const HermitianCircle& c) { return c.A() * c.D() - std::norm(c.B()); }

CircleClass classify(const HermitianCircle& c, double tol) {
  const double delta = discriminant(c);
  const int sign = delta < -tol ? -1 : (delta > tol ? 1 : 0);
  if (c.A() != 0.0) {
    if (sign < 0) return CircleClass::RealCircle;
    if (sign == 0) return CircleClass::PointCircle;
    return CircleClass::ImaginaryCircle;
  }
  return sign < 0 ? CircleClass::StraightLine : CircleClass::Degenerate;
}

CenterRadius center_radius(const HermitianCircle& c) {
  if (c.A() == 0.0) fail(ErrorCode::NotACircle, "A = 0 describes a line");
  const Complex gamma = -std::conj(c.B()) / c.A();
  return {gamma, -discriminant(c) / (c.A() * c.A())};
}

double delta12(const HermitianCircle& c1, const HermitianCircle& c2) {
  const Complex cross = c1.B() * c2.C() + c2.B() * c1.C();
  return 0.5 * (c1.A() * c2.D() + c2.A() * c1.D() - cross.real());
}

bool orthogonal(const HermitianCircle& c1, const HermitianCircle& c2, double tol) {
  const double d1 = discriminant(c1);
  const double d2 = discriminant(c2);
  if (d1 == 0.0 || d2 == 0.0) fail(ErrorCode::DegenerateCircle, "orthogonality needs nonzero discriminants");
  return std::abs(delta12(c1, c2)) <= tol * std::sqrt(std::abs(d1 * d2));
}

double cos_angle(const HermitianCircle& c1, const HermitianCircle& c2) {
  if (classify(c1) != CircleClass::RealCircle || classify(c2) != CircleClass::RealCircle) {
    fail(ErrorCode::DegenerateCircle, "angle needs two real circles of positive radius");
  }
  const auto p = c1.normalized();
  const auto q = c2.normalized();
  return -delta12(p, q) / std::sqrt(discriminant(p) * discriminant(q));
}

namespace {

std::array<double, 4> components(const HermitianCircle& c) { return {c.A(), c.B().real(), c.B().imag(), c.D()}; }

bool proportional(const HermitianCircle& c1, const HermitianCircle& c2) {
  const auto u = components(c1);
  const auto v = components(c2);
  double nu = 0.0;
  double nv = 0.0;
  for (int i = 0; i < 4; ++i) {
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  const double scale = 1e-12 * std::sqrt(nu * nv);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (std::abs(u[i] * v[j] - u[j] * v[i]) > scale) return false;
    }
  }
  return true;
}

}  // namespace

HermitianCircle pencil_member(const HermitianCircle& c1, const HermitianCircle& c2, PencilCoefficients lambda) {
  if (lambda.lambda1 == 0.0 && lambda.lambda2 == 0.0) fail(ErrorCode::DegenerateInput, "lambda = (0, 0)");
  if (proportional(c1, c2)) fail(ErrorCode::NotAPencil, "generators are proportional");
  const double l1 = lambda.lambda1;
  const double l2 = lambda.lambda2;
  HermitianCircle member{l1 * c1.A() + l2 * c2.A(), l1 * c1.B() + l2 * c2.B(), l1 * c1.D() + l2 * c2.D()};

  const double d1 = discriminant(c1);
  const double d2 = discriminant(c2);
  const double d12 = delta12(c1, c2);
  const double expected = d1 * l1 * l1 + 2.0 * d12 * l1 * l2 + d2 * l2 * l2;
  const double scale = std::abs(d1 * l1 * l1) + 2.0 * std::abs(d12 * l1 * l2) + std::abs(d2 * l2 * l2) + 1.0;
  if (std::abs(discriminant(member) - expected) > 1e-10 * scale) {
    fail(ErrorCode::NumericalDomain, "pencil discriminant identity failed");
  }
  return member;
}

namespace {

CenterRadius mirror_data(const HermitianCircle& mirror) {
  if (classify(mirror) != CircleClass::RealCircle) fail(ErrorCode::DegenerateCircle, "mirror must be a real circle");
  return center_radius(mirror);
}

Complex invert_finite(const CenterRadius& m, Complex z) { return m.center + m.rho_sq / std::conj(z - m.center); }

}  // namespace

ExtendedComplex invert_point(const HermitianCircle& mirror, const ExtendedComplex& z) {
  const auto m = mirror_data(mirror);
  if (z.is_infinity()) return ExtendedComplex{m.center};
  if (z.value() == m.center) return ExtendedComplex::infinity();
  return ExtendedComplex{invert_finite(m, z.value())};
}

HermitianCircle invert_circle(const HermitianCircle& mirror, const HermitianCircle& c) {
  const auto m = mirror_data(mirror);
  const Complex g = m.center;
  const double r2 = m.rho_sq;

  // Write c about the mirror center (z = g + t), substitute t = r2 / conj(u)
  // and clear denominators; then shift back to w = g + u.
  const Complex b_rel = c.B() + c.A() * std::conj(g);
  const double d_rel = c.evaluate(g);
  const double a_u = d_rel;
  const Complex b_u = b_rel * r2;
  const double d_u = c.A() * r2 * r2;

  const double a_w = a_u;
  const Complex b_w = b_u - a_u * std::conj(g);
  const double d_w = a_u * std::norm(g) - 2.0 * std::real(b_u * g) + d_u;
  const HermitianCircle image = HermitianCircle{a_w, b_w, d_w}.normalized();

  // Spot-check three real points of c (when it has any) against the image.
  const auto cls = classify(c);
  std::array<Complex, 3> samples{};
  bool have_samples = true;
  if (cls == CircleClass::RealCircle) {
    const auto cr = center_radius(c);
    const double rho = std::sqrt(cr.rho_sq);
    for (int k = 0; k < 3; ++k) samples[k] = cr.center + std::polar(rho, 0.3 + 2.1 * k);
  } else if (cls == CircleClass::StraightLine) {
    const Complex base = -c.D() * std::conj(c.B()) / (2.0 * std::norm(c.B()));
    const Complex dir = Complex{0.0, 1.0} * std::conj(c.B()) / std::abs(c.B());
    for (int k = 0; k < 3; ++k) samples[k] = base + (k - 1.3) * dir;
  } else {
    have_samples = false;
  }
  if (have_samples) {
    for (const Complex p : samples) {
      if (std::abs(p - g) < 1e-9 * (1.0 + std::abs(g))) continue;
      const Complex q = invert_finite(m, p);
      const double scale = std::abs(image.A()) * std::norm(q) + 2.0 * std::abs(image.B()) * std::abs(q) +
                           std::abs(image.D()) + 1.0;
      if (std::abs(image.evaluate(q)) > 1e-8 * scale) {
        fail(ErrorCode::NumericalDomain, "inverted circle failed pointwise check");
      }
    }
  }
  return image;
}

CrossRatio cross_ratio(const ExtendedComplex& z1, const ExtendedComplex& z2, const ExtendedComplex& z3,
                       const ExtendedComplex& z4) {
  const std::array<ExtendedComplex, 4> z{z1, z2, z3, z4};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (z[i] == z[j]) fail(ErrorCode::DegenerateInput, "cross ratio needs four distinct points");
    }
  }
  // Each point appears once in the numerator and once in the denominator, so
  // an infinite point drops both of its factors.
  const auto factor = [&](int i, int j) -> Complex {
    if (z[i].is_infinity() || z[j].is_infinity()) return 1.0;
    return z[i].value() - z[j].value();
  };
  const Complex value = (factor(0, 2) * factor(1, 3)) / (factor(0, 3) * factor(1, 2));
  const bool concyclic = std::abs(value.imag()) <= 1e-9 * (1.0 + std::abs(value));
  return {value, concyclic};
}

void write(wire::Writer& w, const HermitianCircle& c) {
  w.f64(c.A());
  w.f64(c.B().real());
  w.f64(c.B().imag());
  w.f64(c.D());
}

HermitianCircle read_circle(wire::Reader& r) {
  const double a = r.f64();
  const double br = r.f64();
  const double bi = r.f64();
  const double d = r.f64();
  return {a, {br, bi}, d};
}

}  // namespace chrysalis::circle
