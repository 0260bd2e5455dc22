#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chrysalis/error.hpp"
#include "chrysalis/lattice.hpp"
#include "oracles.hpp"

using namespace chrysalis;
using namespace chrysalis::lattice;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}

bool small_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool residue_brute(int k, std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x) {
    std::int64_t v = 1;
    for (int e = 0; e < k; ++e) v = v * x % p;
    if (v == ((a % p) + p) % p) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("lattice counts") {
  auto c = count_lattice_points(0.0);
  CHECK(c.count == 1);
  CHECK(c.error == 1.0);
  CHECK(count_lattice_points(1.0).count == 5);
  CHECK(count_lattice_points(1.0).error == doctest::Approx(5 - std::numbers::pi));
  CHECK(count_lattice_points(2.0).count == 13);
  c = count_lattice_points(3.0);
  CHECK(c.count == 29);
  CHECK(c.error == doctest::Approx(0.726).epsilon(1e-3));
  for (std::int64_t r = 0; r <= 200; ++r) CHECK(count_lattice_points(static_cast<double>(r)).count == oracle::lattice_naive(r));
}

TEST_CASE("lattice counts are monotone and match the parallel split") {
  std::int64_t prev = 0;
  for (int i = 0; i <= 2000; ++i) {
    const double r = i * 0.05;
    const auto c = count_lattice_points(r);
    CHECK(c.count >= prev);
    CHECK(c.error == doctest::Approx(c.count - std::numbers::pi * r * r));
    prev = c.count;
  }
  for (double r : {0.0, 1.0, 17.5, 333.3, 2500.0})
    for (unsigned w : {1u, 2u, 3u, 8u}) CHECK(count_lattice_points_parallel(r, w).count == count_lattice_points(r).count);
}

TEST_CASE("error bound report") {
  const auto rep = error_bound_report(500);
  CHECK(rep.rows.size() == 999);
  CHECK(rep.within_bound);
  CHECK(rep.max_ratio_sqrt <= kErrorBoundConstant);
  CHECK(rep.max_ratio_sqrt >= rep.max_ratio_two_thirds);
  CHECK(rep.sign_changes > 10);
  CHECK(rep.rows.front().r == 1.0);
  CHECK(rep.rows.front().error == doctest::Approx(1.8584).epsilon(1e-4));

  double oracle_max = 0.0;
  for (std::int64_t r = 1; r <= 500; ++r) {
    const double e = static_cast<double>(oracle::lattice_naive(r)) - std::numbers::pi * r * r;
    oracle_max = std::max(oracle_max, std::abs(e) / std::sqrt(static_cast<double>(r)));
  }
  CHECK(oracle_max <= kErrorBoundConstant);
  CHECK(kErrorBoundConstant - oracle_max < 1e-3);
  CHECK_FALSE(error_bound_report(500, 1.0).within_bound);
}

TEST_CASE("Gaussian integer arithmetic") {
  CHECK(gi_norm({3, 4}) == 25);
  CHECK(gi_mul({1, 1}, {1, 1}) == GaussianInt{0, 2});
  CHECK(gi_norm(gi_mul({1, 1}, {2, 1})) == 10);
  CHECK(gi_conj({2, -7}) == GaussianInt{2, 7});
  CHECK(gi_norm({0, 0}) == 0);

  std::mt19937_64 rng(40);
  std::uniform_int_distribution<std::int64_t> u(-100000, 100000);
  for (int i = 0; i < 1000; ++i) {
    const GaussianInt x{u(rng), u(rng)}, y{u(rng), u(rng)};
    CHECK(gi_norm(gi_mul(x, y)) == gi_norm(x) * gi_norm(y));
    CHECK(gi_mul(x, gi_conj(x)) == GaussianInt{gi_norm(x), 0});
  }
}

TEST_CASE("Euclidean division") {
  auto d = gi_divmod({4, 3}, {1, 1});
  CHECK(d.quotient == GaussianInt{4, -1});
  CHECK(d.remainder == GaussianInt{-1, 0});
  d = gi_divmod({7, -2}, {7, -2});
  CHECK(d.quotient == GaussianInt{1, 0});
  CHECK(d.remainder == GaussianInt{0, 0});
  d = gi_divmod({5, 0}, {3, 1});
  CHECK(d.quotient == GaussianInt{2, -1});
  CHECK(d.remainder == GaussianInt{-2, 1});
  CHECK(code_of([] { gi_divmod({1, 1}, {0, 0}); }) == ErrorCode::DivisionByZero);

  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> big(-1000000000, 1000000000), small(-1000, 1000);
  for (int i = 0; i < 1000; ++i) {
    const GaussianInt x{big(rng), big(rng)};
    GaussianInt den{small(rng), small(rng)};
    if (den == GaussianInt{}) den = {1, 0};
    const auto r = gi_divmod(x, den);
    CHECK(r.quotient * den + r.remainder == x);
    CHECK(2 * gi_norm(r.remainder) <= gi_norm(den));
  }
}

TEST_CASE("gcd") {
  // 5 = (2+i)(2-i) and 3+i = (1+i)(2-i); the shared prime is 2-i, whose
  // first-quadrant associate is 1+2i.
  CHECK(gi_gcd({5, 0}, {3, 1}) == GaussianInt{1, 2});
  CHECK(gi_gcd({0, -3}, {0, 0}) == GaussianInt{3, 0});
  CHECK(gi_gcd({2, 0}, {1, 1}) == GaussianInt{1, 1});
  CHECK(gi_gcd({7, 0}, {0, 5}) == GaussianInt{1, 0});
  CHECK(code_of([] { gi_gcd({0, 0}, {0, 0}); }) == ErrorCode::DegenerateInput);
  CHECK(gi_canonical({-2, -1}) == GaussianInt{2, 1});
  CHECK(gi_canonical({0, -4}) == GaussianInt{4, 0});
  CHECK(gi_canonical({-3, 2}) == GaussianInt{2, 3});

  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> u(-300, 300);
  for (int i = 0; i < 500; ++i) {
    const GaussianInt f{u(rng), u(rng)}, a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const GaussianInt x = f * a, y = f * b;
    if (x == GaussianInt{} && y == GaussianInt{}) continue;
    const auto g = gi_gcd(x, y);
    CHECK(g == gi_canonical(g));
    CHECK(gi_divides(g, x));
    CHECK(gi_divides(g, y));
    if (f != GaussianInt{}) {
      CHECK(gi_divides(f, g));
      CHECK(gi_norm(g) % gi_norm(f) == 0);
    }
  }
}

TEST_CASE("Gaussian integer wire format") {
  wire::Writer w;
  write(w, GaussianInt{-5, 123456789});
  wire::Reader r(w.data());
  CHECK(read_gaussian_int(r) == GaussianInt{-5, 123456789});
}

TEST_CASE("residues and reciprocity") {
  CHECK_FALSE(residue_solvable(2, 5, 13));
  CHECK_FALSE(residue_solvable(2, 13, 5));
  CHECK(residue_solvable(2, 13, 17));
  CHECK(residue_solvable(2, 17, 13));
  for (std::int64_t p : {3, 5, 7, 11, 101}) CHECK(residue_solvable(2, 1, p));
  CHECK(code_of([] { residue_solvable(2, 3, 15); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { residue_solvable(2, 26, 13); }) == ErrorCode::DegenerateResidue);

  CHECK(reciprocity_agree(2, 5, 13) == Agreement::Agree);
  CHECK(reciprocity_agree(2, 13, 17) == Agreement::Agree);
  CHECK(reciprocity_agree(2, 3, 7) == Agreement::Disagree);

  for (std::int64_t n = 0; n < 300; ++n) CHECK(is_prime(n) == small_prime(n));
  for (int k = 2; k <= 4; ++k)
    for (std::int64_t p : {3, 7, 13, 29, 31})
      for (std::int64_t a = 1; a < 40; ++a)
        if (a % p != 0) CHECK(residue_solvable(k, a, p) == residue_brute(k, a, p));

  for (std::int64_t p = 5; p <= 200; p += 4)
    for (std::int64_t q = p + 4; q <= 200; q += 4)
      if (small_prime(p) && small_prime(q)) CHECK(reciprocity_agree(2, p, q) == Agreement::Agree);
}
