#pragma once

// Independent reference computations used by the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

/// Composite 5-point Gauss-Legendre rule on n equal panels.
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b, int n) {
  static constexpr std::array<double, 5> x{0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                           0.9061798459386640};
  static constexpr std::array<double, 5> w{0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                           0.2369268850561891, 0.2369268850561891};
  const double h = (b - a) / n;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    const double mid = a + (k + 0.5) * h;
    for (int j = 0; j < 5; ++j) s += w[j] * f(mid + 0.5 * h * x[j]);
  }
  return 0.5 * h * s;
}

/// Five-point central differences.
inline double d1(const std::function<double(double)>& f, double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}
inline double d2(const std::function<double(double)>& f, double x, double h) {
  return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
}

/// Lattice points with m^2 + n^2 <= r^2 by scanning the bounding square.
inline std::int64_t lattice_naive(std::int64_t r) {
  std::int64_t c = 0;
  for (std::int64_t m = -r; m <= r; ++m)
    for (std::int64_t n = -r; n <= r; ++n) c += m * m + n * n <= r * r;
  return c;
}

/// Parity of a permutation of 0..n-1 by counting inversions; 0 if any value repeats.
inline int permutation_sign(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] == p[j]) return 0;
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 == 0 ? 1 : -1;
}

/// Eigenvalues of a symmetric 2x2 in ascending order.
inline std::array<double, 2> eig2(double a, double b, double d) {
  const double mean = 0.5 * (a + d);
  const double rad = std::hypot(0.5 * (a - d), b);
  return {mean - rad, mean + rad};
}

/// Eigenvalues of a symmetric 3x3 in ascending order (trigonometric closed form).
inline std::array<double, 3> eig3(const std::array<std::array<double, 3>, 3>& m) {
  const double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
  const double q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
  if (p1 == 0.0) {
    std::array<double, 3> e{m[0][0], m[1][1], m[2][2]};
    std::sort(e.begin(), e.end());
    return e;
  }
  const double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) + (m[2][2] - q) * (m[2][2] - q) +
                    2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  std::array<std::array<double, 3>, 3> b{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
  const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                     b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
  const double r = std::clamp(det / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double pi = 3.14159265358979323846;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * pi / 3.0);
  const double e2 = 3.0 * q - e1 - e3;
  return {e3, e2, e1};
}

}  // namespace oracle
