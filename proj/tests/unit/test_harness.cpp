#include <doctest.h>

#include <cmath>
#include <numbers>

#include "chrysalis/error.hpp"
#include "chrysalis/harness/quadrature.hpp"
#include "chrysalis/harness/verify.hpp"
#include "chrysalis/onion.hpp"
#include "oracles.hpp"

using namespace chrysalis;
using namespace chrysalis::harness;

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

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("quadrature basics") {
  auto q = integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(q.value - 1.0 / 3.0) <= 1e-12);
  CHECK(q.abs_error_estimate >= 0.0);
  CHECK(q.evaluations > 0);

  q = integrate([](double x) { return std::exp(x); }, -1.0, 2.0, 1e-12);
  CHECK(std::abs(q.value - (std::exp(2.0) - std::exp(-1.0))) <= 1e-11);
  q = integrate([](double x) { return std::abs(x); }, -1.0, 3.0, 1e-12, {0.0});
  CHECK(std::abs(q.value - 5.0) <= 1e-12);

  CHECK(code_of([] { integrate([](double) { return 1.0; }, 1.0, 1.0, 1e-6); }) == ErrorCode::DegenerateInput);
  CHECK(code_of([] { integrate([](double) { return 1.0; }, 0.0, 1.0, 0.0); }) == ErrorCode::DegenerateInput);
  CHECK(code_of([] { integrate([](double x) { return x < 1.0 / 3.0 ? 0.0 : 1.0; }, 0.0, 1.0, 1e-20); }) ==
        ErrorCode::ConvergenceFailure);
  CHECK(code_of([] { integrate([](double x) { return std::log(x - 0.5); }, 0.0, 1.0, 1e-8); }) ==
        ErrorCode::NumericalDomain);
}

TEST_CASE("quadrature is partition consistent") {
  const auto f = [](double x) { return std::sin(3 * x) * std::exp(-x * x / 4) + 0.1 * x; };
  const double tol = 1e-10;
  const double whole = integrate(f, -2.0, 5.0, tol).value;
  for (double c : {-1.5, -0.3, 0.0, 1.0, 2.718, 4.9}) {
    const double split = integrate(f, -2.0, c, tol).value + integrate(f, c, 5.0, tol).value;
    CHECK(std::abs(whole - split) <= 2 * tol);
  }
  CHECK(std::abs(whole - oracle::gauss_legendre(f, -2.0, 5.0, 400)) <= tol);
}

TEST_CASE("printed integrals") {
  const double elliptic = 8.0 * std::comp_ellint_2(std::sqrt(0.75));
  auto q = gaussian_arc_length();
  CHECK(std::abs(q.value - elliptic) <= 1e-10);
  CHECK(std::abs(q.value - 9.68845) <= 1e-4);

  const auto cli = integrate(onion::gaussian_speed, 0.0, 2 * kPi, 1e-11);
  CHECK(cli.value == q.value);

  q = geodesic_arc_length();
  CHECK(std::abs(q.value - 0.000172061) <= 2e-7);
  const double oracle_geo = 2.0 * (oracle::gauss_legendre(onion::geodesic_integrand, 0.0, 10.0, 4000) +
                                   oracle::gauss_legendre(onion::geodesic_integrand, 10.0, 100.0, 400));
  CHECK(std::abs(q.value - oracle_geo) <= 1e-12);

  q = blue_definite_integral();
  const double a = std::pow(12.511 * kPi * kPi * kPi, 0.25);
  const double closed = 2.0 * (12.511 * a - std::pow(a, 5) / (5 * kPi * kPi * kPi));
  CHECK(std::abs(q.value - closed) <= 1e-9);
  CHECK(std::abs(q.value - 88.8377) <= 1e-3);

  const double root = blue_root_newton();
  CHECK(std::abs(root - a) <= 1e-12);
  CHECK(std::abs(root - 4.43798) <= 1e-5);
}

TEST_CASE("verification suite") {
  const auto rep = verify_suite();
  CHECK(rep.all_pass());
  CHECK(rep.rows.size() >= 18);
  for (const auto& r : rep.rows) {
    CHECK(r.pass == (r.abs_diff <= r.tolerance));
    CHECK(r.abs_diff == std::abs(r.computed - r.printed_value));
  }
  const auto again = verify_suite();
  REQUIRE(again.rows.size() == rep.rows.size());
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(again.rows[i].name == rep.rows[i].name);
    CHECK(again.rows[i].computed == rep.rows[i].computed);
  }
  auto find = [&](const std::string& name) -> const VerificationRow& {
    for (const auto& r : rep.rows)
      if (r.name == name) return r;
    FAIL("missing row " << name);
    return rep.rows.front();
  };
  CHECK(find("geodesic arc").tolerance == 2e-7);
  CHECK(find("blue roots").tolerance == 1e-5);
  CHECK(find("N(2)").computed == 13.0);
  CHECK(find("N(2)").tolerance == 0.0);
}
