#include "chrysalis/lattice.hpp"

#include <cmath>
#include <future>
#include <numbers>

namespace chrysalis::lattice {

namespace {

__extension__ using i128 = __int128;

// round(n / d) with ties away from zero, d > 0.
std::int64_t round_div(i128 n, i128 d) {
  const i128 mag = n < 0 ? -n : n;
  const i128 q = (2 * mag + d) / (2 * d);
  return static_cast<std::int64_t>(n < 0 ? -q : q);
}

// floor(sqrt(v)) for v >= 0, corrected to be exact on representable integers.
std::int64_t floor_sqrt(double v) {
  if (v < 0.0) return -1;
  auto s = static_cast<std::int64_t>(std::sqrt(v));
  while (static_cast<double>(s + 1) * static_cast<double>(s + 1) <= v) ++s;
  while (s > 0 && static_cast<double>(s) * static_cast<double>(s) > v) --s;
  return s;
}

std::int64_t count_rows(double r2, std::int64_t lo, std::int64_t hi) {
  std::int64_t total = 0;
  for (std::int64_t m = lo; m <= hi; ++m) {
    const double rest = r2 - static_cast<double>(m) * static_cast<double>(m);
    if (rest < 0.0) continue;
    total += 2 * floor_sqrt(rest) + 1;
  }
  return total;
}

LatticeCount make_count(double r, std::int64_t count) {
  return {r, count, static_cast<double>(count) - std::numbers::pi * r * r};
}

}  // namespace

std::int64_t gi_norm(GaussianInt x) { return x.a * x.a + x.b * x.b; }
GaussianInt gi_conj(GaussianInt x) { return {x.a, -x.b}; }
GaussianInt gi_mul(GaussianInt x, GaussianInt y) { return x * y; }

DivMod gi_divmod(GaussianInt x, GaussianInt d) {
  if (d.a == 0 && d.b == 0) fail(ErrorCode::DivisionByZero, "Gaussian division by zero");
  // x / d = x conj(d) / N(d); round each coordinate of the exact quotient.
  const i128 n = static_cast<i128>(d.a) * d.a + static_cast<i128>(d.b) * d.b;
  const i128 re = static_cast<i128>(x.a) * d.a + static_cast<i128>(x.b) * d.b;
  const i128 im = static_cast<i128>(x.b) * d.a - static_cast<i128>(x.a) * d.b;
  const GaussianInt q{round_div(re, n), round_div(im, n)};
  return {q, x - q * d};
}

GaussianInt gi_canonical(GaussianInt x) {
  if (x.a == 0 && x.b == 0) return x;
  const GaussianInt i{0, 1};
  for (int k = 0; k < 4; ++k) {
    if (x.a > 0 && x.b >= 0) return x;
    x = x * i;
  }
  return x;
}

GaussianInt gi_gcd(GaussianInt x, GaussianInt y) {
  if (x == GaussianInt{} && y == GaussianInt{}) fail(ErrorCode::DegenerateInput, "gcd(0, 0)");
  while (!(y == GaussianInt{})) {
    const auto r = gi_divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return gi_canonical(x);
}

bool gi_divides(GaussianInt d, GaussianInt x) {
  if (d == GaussianInt{}) return x == GaussianInt{};
  return gi_divmod(x, d).remainder == GaussianInt{};
}

void write(wire::Writer& w, GaussianInt x) {
  w.i64(x.a);
  w.i64(x.b);
}

GaussianInt read_gaussian_int(wire::Reader& r) {
  const auto a = r.i64();
  const auto b = r.i64();
  return {a, b};
}

LatticeCount count_lattice_points(double r) {
  if (!(r >= 0.0)) fail(ErrorCode::DegenerateInput, "radius must be non-negative");
  const double r2 = r * r;
  const std::int64_t R = floor_sqrt(r2);
  return make_count(r, count_rows(r2, -R, R));
}

LatticeCount count_lattice_points_parallel(double r, unsigned workers) {
  if (!(r >= 0.0)) fail(ErrorCode::DegenerateInput, "radius must be non-negative");
  if (workers <= 1) return count_lattice_points(r);
  const double r2 = r * r;
  const std::int64_t R = floor_sqrt(r2);
  const std::int64_t rows = 2 * R + 1;
  const std::int64_t chunk = (rows + workers - 1) / workers;
  std::vector<std::future<std::int64_t>> parts;
  for (std::int64_t lo = -R; lo <= R; lo += chunk) {
    const std::int64_t hi = std::min(R, lo + chunk - 1);
    parts.push_back(std::async(std::launch::async, count_rows, r2, lo, hi));
  }
  std::int64_t total = 0;
  for (auto& p : parts) total += p.get();
  return make_count(r, total);
}

ErrorBoundReport error_bound_report(int r_max, double bound) {
  if (r_max < 1) fail(ErrorCode::DegenerateInput, "r_max must be >= 1");
  ErrorBoundReport rep;
  int last_sign = 0;
  for (int twice = 2; twice <= 2 * r_max; ++twice) {
    const double r = twice / 2.0;
    const auto c = count_lattice_points(r);
    const double mag = std::abs(c.error);
    ErrorBoundRow row{r, c.count, c.error, mag / std::sqrt(r), mag / std::cbrt(r * r)};
    if (row.ratio_sqrt > rep.max_ratio_sqrt) {
      rep.max_ratio_sqrt = row.ratio_sqrt;
      rep.argmax_sqrt = r;
    }
    rep.max_ratio_two_thirds = std::max(rep.max_ratio_two_thirds, row.ratio_two_thirds);
    if (mag > bound * std::sqrt(r)) rep.within_bound = false;
    const int sign = c.error > 0 ? 1 : (c.error < 0 ? -1 : 0);
    if (sign != 0) {
      if (last_sign != 0 && sign != last_sign) ++rep.sign_changes;
      last_sign = sign;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool residue_solvable(int k, std::int64_t a, std::int64_t p) {
  if (k < 2 || k > 4) fail(ErrorCode::IndexOutOfRange, "residue degree must be 2, 3 or 4");
  if (!is_prime(p)) fail(ErrorCode::NotPrime, "modulus is not prime");
  const std::int64_t target = ((a % p) + p) % p;
  if (target == 0) fail(ErrorCode::DegenerateResidue, "modulus divides the residue");
  for (std::int64_t x = 1; x < p; ++x) {
    std::int64_t v = 1;
    for (int e = 0; e < k; ++e) v = (v * x) % p;
    if (v == target) return true;
  }
  return false;
}

Agreement reciprocity_agree(int k, std::int64_t p, std::int64_t q) {
  if (p == q || p % 2 == 0 || q % 2 == 0) fail(ErrorCode::DegenerateInput, "need distinct odd primes");
  return residue_solvable(k, p, q) == residue_solvable(k, q, p) ? Agreement::Agree : Agreement::Disagree;
}

}  // namespace chrysalis::lattice
