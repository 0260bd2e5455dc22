// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chrysalis/bmi.hpp"
#include "chrysalis/circle.hpp"
#include "chrysalis/harness/quadrature.hpp"
#include "chrysalis/harness/verify.hpp"
#include "chrysalis/lattice.hpp"
#include "chrysalis/onion.hpp"
#include "chrysalis/protocol/handshake.hpp"
#include "chrysalis/protocol/keys.hpp"
#include "chrysalis/tensor.hpp"
#include "oracles.hpp"

using namespace chrysalis;

namespace {

constexpr double kPi = std::numbers::pi;
const double kPi3 = kPi * kPi * kPi;

/// Collects sub-check outcomes for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool pass() const { return pass_; }
  std::string detail() const {
    std::ostringstream o;
    const auto& items = pass_ ? notes_ : failures_;
    for (std::size_t i = 0; i < items.size(); ++i) o << (i ? "; " : "") << items[i];
    return o.str();
  }

 private:
  bool pass_ = true;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void gaussian_arc(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto q = harness::gaussian_arc_length();
  const double dt = seconds_since(t0);
  const double diff = std::abs(q.value - 9.68845);
  c.expect(diff <= 1e-4, fmt("|L - 9.68845| = %.3g > 1e-4", diff));
  c.expect(dt < 0.1, fmt("took %.3g s, limit 0.1 s", dt));
  c.note(fmt("L = %.10g, %.2g s", q.value, dt));
}

void geodesic_arc(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto q = harness::geodesic_arc_length();
  const double dt = seconds_since(t0);
  const double diff = std::abs(q.value - 0.000172061);
  c.expect(diff <= 2e-7, fmt("|I - 0.000172061| = %.3g > 2e-7", diff));
  c.expect(dt < 1.0, fmt("took %.3g s, limit 1 s", dt));
  c.note(fmt("I = %.10g, %.2g s", q.value, dt));
}

void blue_constants(Check& c) {
  const auto roots = onion::onion_roots(onion::OnionColor::Blue);
  for (const auto& r : roots) {
    const double d = std::abs(std::abs(r) - 4.43798);
    c.expect(d <= 1e-5, fmt("root magnitude off by %.3g", d));
  }
  const double newton = harness::blue_root_newton();
  c.expect(std::abs(newton - 4.43798) <= 1e-5, fmt("Newton root %.10g", newton));

  const double integral = harness::blue_definite_integral().value;
  const double a = std::pow(12.511 * kPi3, 0.25);
  const double closed = 2.0 * (12.511 * a - std::pow(a, 5) / (5.0 * kPi3));
  c.expect(std::abs(integral - 88.8377) <= 1e-3, fmt("integral %.10g", integral));
  c.expect(std::abs(integral - closed) <= 1e-9, fmt("quadrature %.12g vs antiderivative %.12g", integral, closed));

  const double inv = std::pow(kPi, 0.75) / std::pow(1000.0, 0.25);
  c.expect(std::abs(inv - 0.419626) <= 1e-6, fmt("inverse constant %.10g", inv));
  c.expect(std::abs(onion::blue_inverse_constant() - inv) <= 1e-15, "library inverse constant differs");

  const double disc = 256.0 * std::pow(12.511, 3) / std::pow(kPi, 9);
  c.expect(std::abs(disc - 16.8177) <= 1e-3, fmt("discriminant magnitude %.10g", disc));
  c.expect(std::abs(std::abs(onion::onion_discriminant(onion::OnionColor::Blue)) - disc) <= 1e-9 * disc,
           "library discriminant differs");
  c.note(fmt("root %.10g, integral %.10g", newton, integral));
}

double blue(double x) { return 12.511 - std::pow(x, 4) / kPi3; }

void osculating(Check& c) {
  double worst = 0.0;
  for (double x0 : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    const double f1 = oracle::d1(blue, x0, 1e-2);
    const double f2 = oracle::d2(blue, x0, 1e-2);
    const double g = 1.0 + f1 * f1;
    const double cx = x0 - f1 * g / f2, cy = blue(x0) + g / f2, r = std::pow(g, 1.5) / std::abs(f2);
    const auto o = onion::osculating_circle(x0);
    worst = std::max({worst, std::abs(o.center_x - cx) / std::abs(cx), std::abs(o.center_y - cy) / std::abs(cy),
                      std::abs(o.radius - r) / r});
    const double rhs = onion::geodesic_rhs(x0);
    c.expect(std::abs(rhs - o.radius * o.radius) <= 1e-10 * o.radius * o.radius,
             fmt("x0 = %g: RHS - R^2 = %.3g", x0, rhs - o.radius * o.radius));
  }
  c.expect(worst <= 1e-6, fmt("finite-difference oracle relative gap %.3g", worst));
  const double q = 7.0 / (3.0 * kPi3), s = kPi3 / 12.0;
  c.expect(std::abs(q - 0.0752536) <= 1e-6, fmt("|7/(3 pi^3) - 0.0752536| = %.3g", std::abs(q - 0.0752536)));
  c.expect(std::abs(s - 2.58386) <= 1e-6,
           fmt("|pi^3/12 - 2.58386| = %.3g > 1e-6 (pi^3/12 = %.9g)", std::abs(s - 2.58386), s));
  c.note(fmt("oracle gap %.2g; constants %.9g", worst, q));
}

void intersections_and_parents(Check& c) {
  c.expect(onion::red_green_intersections() == std::vector<double>{0.0, 4.0}, "intersection set is not {0, 4}");
  for (int n = -2; n <= 2; ++n) {
    const auto z = std::complex<double>(2 * kPi * n - kPi / 2, std::log(2.0));
    const double m = std::abs(onion::parent_X(z));
    c.expect(m <= 1e-12, fmt("|X| = %.3g at n = %g", m, n));
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) worst = std::max(worst, std::abs(std::abs(onion::parent_Y(u(rng))) - 2.0));
  c.expect(worst <= 1e-12, fmt("max ||Y| - 2| = %.3g", worst));
  c.note(fmt("max ||Y| - 2| = %.2g", worst));
}

void keyspace(Check& c) {
  const auto k = protocol::keyspace_counts();
  c.expect(k.eight_element == 40320, "8! constant");
  c.expect(k.six_element == 720, "6! constant");
  c.expect(k.clique_permutations == 2116828080ULL, "perm(216, 4)");
  c.note("40320, 720, 2116828080");
}

void gauss_circle(Check& c) {
  for (std::int64_t r = 0; r <= 200; ++r) {
    const auto n = lattice::count_lattice_points(static_cast<double>(r)).count;
    if (n != oracle::lattice_naive(r)) c.expect(false, "per-row count differs at r = " + std::to_string(r));
  }
  c.expect(lattice::count_lattice_points(1).count == 5, "N(1)");
  c.expect(lattice::count_lattice_points(2).count == 13, "N(2)");
  c.expect(lattice::count_lattice_points(3).count == 29, "N(3)");
  double worst = 0.0;
  for (std::int64_t r = 1; r <= 500; ++r) {
    const double e = std::abs(static_cast<double>(lattice::count_lattice_points(static_cast<double>(r)).count) -
                              kPi * static_cast<double>(r * r));
    worst = std::max(worst, e / std::sqrt(static_cast<double>(r)));
  }
  c.expect(worst <= lattice::kErrorBoundConstant, fmt("max |E|/sqrt(r) = %.6g exceeds C", worst));
  c.expect(lattice::error_bound_report(500).within_bound, "report flags a bound violation");
  c.note(fmt("max |E|/sqrt(r) = %.8g, C = %.5g", worst, lattice::kErrorBoundConstant));
}

void euclidean(Check& c) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> big(-1000000000, 1000000000), small(-100000, 100000);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const lattice::GaussianInt x{big(rng), big(rng)};
    lattice::GaussianInt d{small(rng), small(rng)};
    if (d == lattice::GaussianInt{}) d = {1, 0};
    const auto qr = lattice::gi_divmod(x, d);
    if (!(qr.quotient * d + qr.remainder == x) || 2 * lattice::gi_norm(qr.remainder) > lattice::gi_norm(d)) ++bad;
    const lattice::GaussianInt y{small(rng), small(rng)};
    const auto g = lattice::gi_gcd(d, y);
    if (!lattice::gi_divides(g, d) || !lattice::gi_divides(g, y)) ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " failing cases");
  c.note("1000 divmod and gcd cases");
}

void tensors(Check& c) {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      c.expect(tensor::pauli_identity_check(i, j), "Pauli identity (" + std::to_string(i) + "," + std::to_string(j) + ")");
  int perms = 0;
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      ++perms;
      if (tensor::levi_civita(p) != oracle::permutation_sign(p)) c.expect(false, "Levi-Civita parity");
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    ComplexMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = {u(rng), u(rng)};
    c.expect(tensor::conj_det_check(m), "det(conj M) != conj(det M)");
  }
  c.note(std::to_string(perms) + " permutations");
}

void bmi_lmi(Check& c) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 500; ++k) {
    const std::size_t m = 1 + k % 4;
    bmi::Vector x(m);
    for (auto& v : x) v = u(rng);
    Matrix w(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) w(i, j) = x[i] * x[j];
    if (!bmi::lmi_lift(x, bmi::SymmetricMatrix(w)).feasible) c.expect(false, "lift of x x^T infeasible");
  }
  double worst = 0.0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t n = 2 + k % 2;
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
    const auto e = bmi::jacobi_eigen(bmi::SymmetricMatrix(a));
    if (n == 2) {
      const auto o = oracle::eig2(a(0, 0), a(0, 1), a(1, 1));
      for (int i = 0; i < 2; ++i) worst = std::max(worst, std::abs(e.values[i] - o[i]));
    } else {
      std::array<std::array<double, 3>, 3> b{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = a(i, j);
      const auto o = oracle::eig3(b);
      for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(e.values[i] - o[i]));
    }
  }
  c.expect(worst <= 1e-9, fmt("eigenvalue gap %.3g", worst));
  const double norm = bmi::operator_norm(Matrix{{1, 2}, {0, 1}});
  c.expect(std::abs(norm - (1 + std::sqrt(2.0))) <= 1e-9, fmt("operator norm %.12g", norm));

  std::uniform_int_distribution<int> side(1, 11);
  for (int k = 0; k < 100; ++k) {
    const std::size_t m = side(rng);
    const std::size_t n = 1 + std::uniform_int_distribution<std::size_t>(0, 11 - m)(rng);
    Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = u(rng);
    double best = -INFINITY;
    for (std::uint32_t bits = 0; bits < (1u << (m + n)); ++bits) {
      double v = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) v += a(i, j) * ((bits >> i & 1) ? 1 : -1) * ((bits >> (m + j) & 1) ? 1 : -1);
      best = std::max(best, v);
    }
    const double got = bmi::bilinear_max_pm1({a}).value;
    if (std::abs(got - best) > 1e-12 * std::max(1.0, std::abs(best))) c.expect(false, fmt("max %.12g vs %.12g", got, best));
  }
  c.note(fmt("eigen gap %.2g", worst));
}

void circles(Check& c) {
  using circle::circle_from_center_radius;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(-3.0, 3.0), rad(0.2, 3.0), ang(0.0, 2 * kPi);
  const double tol = 1e-9;
  int orthogonal_pairs = 0, checked = 0;
  for (int k = 0; k < 200; ++k) {
    const std::complex<double> c1{pos(rng), pos(rng)};
    const double r1 = rad(rng), r2 = rad(rng);
    const std::complex<double> c2 =
        k % 2 == 0 ? c1 + std::polar(std::sqrt(r1 * r1 + r2 * r2), ang(rng)) : std::complex<double>{pos(rng), pos(rng)};
    const double gap = std::norm(c1 - c2) - r1 * r1 - r2 * r2;
    const bool center_criterion = std::abs(gap) <= 2 * tol * r1 * r2;
    if (!center_criterion && std::abs(gap) <= 20 * tol * r1 * r2) continue;
    ++checked;
    const bool ortho = circle::orthogonal(circle_from_center_radius(c1, r1 * r1), circle_from_center_radius(c2, r2 * r2), tol);
    orthogonal_pairs += ortho;
    if (ortho != center_criterion) c.expect(false, "orthogonality disagrees with the center criterion");
  }
  c.expect(orthogonal_pairs >= 90, "too few orthogonal pairs constructed");

  const struct {
    double cx, r1, r2;
    double expect;
  } tangent[] = {{1.0, 4.0, 3.0, 1.0}, {5.0, 4.0, 1.0, -1.0}, {5.0, 2.0, 3.0, -1.0}, {2.0, 5.0, 3.0, 1.0},
                 {-6.0, 2.0, 4.0, -1.0}};
  for (const auto& t : tangent) {
    const double cs = circle::cos_angle(circle_from_center_radius(0.0, t.r1 * t.r1),
                                        circle_from_center_radius(t.cx, t.r2 * t.r2));
    c.expect(cs == t.expect, fmt("tangent cos = %.17g, want %g", cs, t.expect));
  }

  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const std::complex<double> ctr{pos(rng), pos(rng)};
    const double r = rad(rng);
    std::vector<sphere::ExtendedComplex> z;
    for (int i = 0; i < 4; ++i) z.emplace_back(ctr + std::polar(r, ang(rng)));
    const auto x = circle::cross_ratio(z[0], z[1], z[2], z[3]);
    worst = std::max(worst, std::abs(x.value.imag()) / std::max(1.0, std::abs(x.value)));
    c.expect(x.concyclic, "concyclic quadruple not flagged");
  }
  c.expect(worst <= 1e-9, fmt("cross-ratio imaginary part %.3g", worst));
  c.note(std::to_string(checked) + " pairs, " + std::to_string(orthogonal_pairs) + " orthogonal; cross-ratio Im " +
         fmt("%.2g", worst));
}

struct Pair {
  protocol::Session server;
  protocol::Session client;
  std::size_t frames = 0;
};

Pair run_pair(std::uint64_t a, std::uint64_t b, const std::function<void(std::size_t, wire::Bytes&)>& mutate = {}) {
  Pair p{protocol::Session(protocol::Role::Server, a), protocol::Session(protocol::Role::Client, b)};
  auto in_flight = protocol::handshake_step(p.server, std::nullopt);
  bool to_client = true;
  while (!in_flight.empty()) {
    std::vector<wire::Bytes> next;
    for (auto& f : in_flight) {
      if (mutate) mutate(p.frames, f);
      ++p.frames;
      auto& dst = to_client ? p.client : p.server;
      if (dst.finished()) continue;
      auto out = protocol::handshake_step(dst, std::span<const std::uint8_t>(f));
      next.insert(next.end(), out.begin(), out.end());
    }
    in_flight = std::move(next);
    to_client = !to_client;
  }
  return p;
}

bool agreed(const Pair& p) {
  using protocol::SessionState;
  return p.server.state() == SessionState::Authenticated && p.client.state() == SessionState::Authenticated &&
         p.server.session_key() == p.client.session_key();
}

void protocol_round_trip(Check& c) {
  protocol::SplitMix64 rng(12);
  for (int k = 0; k < 1000; ++k) {
    const Pair p = run_pair(rng.next(), rng.next());
    if (!agreed(p) || p.frames != 5) c.expect(false, "honest pair " + std::to_string(k) + " failed");
  }

  int opened = 0;
  for (int k = 0; k < 10000; ++k) {
    const std::uint64_t a = rng.next(), b = rng.next();
    const std::size_t target = rng.below(5);
    const std::uint64_t pick = rng.next();
    const auto flip = static_cast<std::uint8_t>(1 + rng.below(255));
    const bool fix_crc = rng.coin();
    const Pair p = run_pair(a, b, [&](std::size_t i, wire::Bytes& f) {
      if (i != target) return;
      if (fix_crc) {
        const std::size_t body = f.size() - protocol::kFrameHeaderSize - protocol::kFrameTrailerSize;
        if (body == 0) {
          f[pick % f.size()] ^= flip;
          return;
        }
        f[protocol::kFrameHeaderSize + pick % body] ^= flip;
        auto g = protocol::Frame{static_cast<protocol::MsgType>(f[5]),
                                 wire::Bytes(f.begin() + protocol::kFrameHeaderSize, f.end() - protocol::kFrameTrailerSize)};
        f = protocol::serialize(g);
      } else {
        f[pick % f.size()] ^= flip;
      }
    });
    const bool closed = p.server.state() == protocol::SessionState::Closed ||
                        p.client.state() == protocol::SessionState::Closed;
    if (agreed(p) || !closed) ++opened;
  }
  c.expect(opened == 0, std::to_string(opened) + " of 10000 mutated exchanges did not fail closed");

  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const auto rack = protocol::rack_default(seed);
    const auto h = protocol::pen(rack, static_cast<std::uint32_t>(seed % 8), seed ^ 0x5EED);
    if (!protocol::is_homeomorphic(h.graph, rack.graph)) c.expect(false, "pen not homeomorphic at seed " + std::to_string(seed));
  }
  c.note("1000 honest, 10000 mutated, 2000 pen seeds");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"gaussian arc length", gaussian_arc},
      {"geodesic arc length", geodesic_arc},
      {"blue onion constants", blue_constants},
      {"osculating-circle oracle", osculating},
      {"intersections and parent functions", intersections_and_parents},
      {"keyspace constants", keyspace},
      {"gauss circle counts", gauss_circle},
      {"gaussian integer euclidean property", euclidean},
      {"tensor identities", tensors},
      {"bmi and lmi", bmi_lmi},
      {"circle algebra", circles},
      {"protocol round trip", protocol_round_trip},
  };
  int failed = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    failed += !c.pass();
    std::printf("%s %2zu %-38s %s\n", c.pass() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), c.detail().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
              seconds_since(t0));
  return failed == 0 ? 0 : 1;
}
