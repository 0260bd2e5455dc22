#include "chrysalis/protocol/keys.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string_view>

#include "chrysalis/bmi.hpp"

namespace chrysalis::protocol {

namespace {

using sphere::SpherePoint;

constexpr double kPi = std::numbers::pi;

SpherePoint scaled(const SpherePoint& p, double k) { return {p.xi * k, p.eta * k, p.zeta * k}; }
SpherePoint added(const SpherePoint& a, const SpherePoint& b) { return {a.xi + b.xi, a.eta + b.eta, a.zeta + b.zeta}; }
SpherePoint normalized(const SpherePoint& p) { return scaled(p, 1.0 / p.norm()); }

bmi::Vector as_vector(const SpherePoint& p) { return {p.xi, p.eta, p.zeta}; }
SpherePoint as_point(const bmi::Vector& v) { return {v[0], v[1], v[2]}; }

void write_bytes_tagged(wire::Writer& w, std::string_view tag) {
  w.bytes({reinterpret_cast<const std::uint8_t*>(tag.data()), tag.size()});
}

Complex point_image(const SpherePoint& p) { return sphere::project_to_plane(p).value(); }

}  // namespace

OnionColor normalize_color(OnionColor c) {
  if (c == OnionColor::Red) return c;
  return *onion::onion_derivative(c).color();
}

Rack rack_default(std::uint64_t seed) {
  SplitMix64 rng(seed);
  Rack rack;
  rack.seed = seed;
  rack.original = {OnionColor::Green, OnionColor::Red, OnionColor::Blue};
  for (std::size_t i = rack.original.size() - 1; i > 0; --i)
    std::swap(rack.original[i], rack.original[rng.below(i + 1)]);
  for (auto c : rack.original) rack.onions.push_back(normalize_color(c));
  rack.graph = Graph::path(static_cast<std::uint32_t>(rack.original.size()));
  return rack;
}

void write(wire::Writer& w, const Rack& rack) {
  w.u64(rack.seed);
  w.u32(static_cast<std::uint32_t>(rack.original.size()));
  for (std::size_t k = 0; k < rack.original.size(); ++k) {
    w.u8(static_cast<std::uint8_t>(rack.original[k]));
    w.u8(static_cast<std::uint8_t>(rack.onions[k]));
  }
  write(w, rack.graph);
}

HClique pen(const Rack& rack, std::uint32_t extra_nodes, std::uint64_t seed) {
  SplitMix64 rng(seed);
  HClique h;
  h.rack_nodes = rack.graph.node_count();
  std::uint32_t next_id = h.rack_nodes;

  for (const auto& [u, v] : rack.graph.edges()) {
    std::vector<std::uint32_t> path{u};
    const auto k = static_cast<std::uint32_t>(rng.below(3));
    for (std::uint32_t i = 0; i < k; ++i) path.push_back(next_id++);
    path.push_back(v);
    h.subdivisions += k;
    h.witness.push_back(std::move(path));
  }

  for (std::uint32_t e = 0; e < extra_nodes; ++e) {
    std::uint64_t total = 0;
    for (const auto& p : h.witness) total += p.size() - 1;
    std::uint64_t pick = rng.below(total);
    for (auto& p : h.witness) {
      if (pick < p.size() - 1) {
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(pick) + 1, next_id++);
        break;
      }
      pick -= p.size() - 1;
    }
  }

  std::vector<Edge> edges;
  for (const auto& p : h.witness)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(p[i], p[i + 1]);
  h.graph = Graph(next_id, std::move(edges));

  for (std::uint32_t id = 0; id < next_id; ++id) {
    if (id < h.rack_nodes) {
      const auto roots = onion::onion_roots(rack.original[id]);
      const auto idx = rng.below(roots.size());
      h.labels.push_back({LabelKind::OnionRoot, static_cast<double>(idx), roots[idx]});
    } else if (rng.coin()) {
      const auto s = onion::sample_parent(onion::ParentAxis::X, rng.uniform(0.0, onion::kParentXPeriod));
      h.labels.push_back({LabelKind::ParentX, s.argument, s.value});
    } else {
      const auto s = onion::sample_parent(onion::ParentAxis::Y, rng.uniform(0.0, onion::kParentYPeriod));
      h.labels.push_back({LabelKind::ParentY, s.argument, s.value});
    }
  }

  wire::Writer w;
  write(w, rack);
  h.origin = sha256(w.data());
  return h;
}

std::vector<std::uint32_t> inserted_nodes(const HClique& h) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t id = h.rack_nodes; id < h.graph.node_count(); ++id) out.push_back(id);
  return out;
}

void write(wire::Writer& w, const HClique& h) {
  write(w, h.graph);
  w.u32(static_cast<std::uint32_t>(h.labels.size()));
  for (const auto& l : h.labels) {
    w.u8(static_cast<std::uint8_t>(l.kind));
    w.f64(l.argument);
    w.complex(l.value);
  }
  w.u32(static_cast<std::uint32_t>(h.witness.size()));
  for (const auto& p : h.witness) {
    w.u32(static_cast<std::uint32_t>(p.size()));
    for (auto id : p) w.u32(id);
  }
  w.bytes(h.origin);
  w.u32(h.rack_nodes);
  w.u32(h.subdivisions);
}

Digest hclique_digest(const HClique& h) {
  wire::Writer w;
  write(w, h);
  return sha256(w.data());
}

double PrivateAngle::total_deg() const {
  double s = 0.0;
  for (double d : omega_deg) s += d;
  return s;
}

double PrivateAngle::total_rad() const { return total_deg() * kPi / 180.0; }

PrivateAngle draw_private_angle(SplitMix64& rng, std::size_t components) {
  std::vector<double> weights(components + 1);
  double sum = 0.0;
  for (double& x : weights) sum += (x = rng.unit_open());
  PrivateAngle a;
  for (std::size_t k = 0; k < components; ++k) a.omega_deg.push_back(kAngleSumCapDeg * weights[k] / sum);
  while (a.total_deg() > kAngleSumCapDeg)
    for (double& d : a.omega_deg) d = std::nextafter(d, 0.0);
  return a;
}

void write(wire::Writer& w, const Blip& b) {
  for (const auto& p : b.antipodes) sphere::write(w, p);
  w.complex(b.projected);
  lattice::write(w, b.g);
  w.bytes(b.hclique_digest);
  w.u32(b.params_version);
}

Blip read_blip(wire::Reader& r) {
  Blip b;
  for (auto& p : b.antipodes) {
    p = sphere::read_sphere_point(r);
    if (!(std::abs(p.norm() - 1.0) <= 1e-12)) fail(ErrorCode::FrameCorrupt, "blip antipode is not a unit vector");
  }
  b.projected = r.complex();
  if (!std::isfinite(b.projected.real()) || !std::isfinite(b.projected.imag()))
    fail(ErrorCode::FrameCorrupt, "blip projection is not finite");
  b.g = lattice::read_gaussian_int(r);
  b.hclique_digest = r.fixed<32>();
  b.params_version = r.u32();
  return b;
}

wire::Bytes serialize(const Blip& b) {
  wire::Writer w;
  write(w, b);
  return std::move(w).take();
}

SpherePoint rotate(const SpherePoint& p, const SpherePoint& n, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return added(added(scaled(p, c), scaled(n.cross(p), s)), scaled(n, n.dot(p) * (1.0 - c)));
}

KeyPair keygen(std::uint32_t params_version, std::uint64_t seed) {
  if (params_version != kParamsVersion) fail(ErrorCode::VersionMismatch, "unsupported params_version");
  SplitMix64 rng(seed);
  KeyPair kp;
  kp.seed = seed;
  kp.params_version = params_version;
  PrivateKey& pk = kp.priv;
  const Rack rack = rack_default(seed);

  // Step 1: a great circle whose highest point lies strictly above the equator.
  double nz = 1.0;
  double phi = 0.0;
  while (std::abs(nz) > 0.99) {
    nz = rng.uniform(-1.0, 1.0);
    phi = rng.uniform(0.0, 2.0 * kPi);
  }
  const double rho = std::sqrt(1.0 - nz * nz);
  pk.normal = {rho * std::cos(phi), rho * std::sin(phi), nz};
  const SpherePoint e1 = normalized(added(SpherePoint{0.0, 0.0, 1.0}, scaled(pk.normal, -nz)));
  const SpherePoint e2 = pk.normal.cross(e1);
  const double alpha = rng.uniform(-kPi / 4.0, kPi / 4.0);
  for (int k = 0; k < 3; ++k) {
    const double t = alpha + 2.0 * kPi * k / 3.0;
    pk.points[k] = added(scaled(e1, std::cos(t)), scaled(e2, std::sin(t)));
  }

  // Steps 2 and 3.
  for (int k = 0; k < 3; ++k) {
    pk.v[k] = onion::parent_X(rng.uniform(0.0, onion::kParentXPeriod));
    pk.w[k] = onion::parent_Y(rng.uniform(0.0, onion::kParentYPeriod));
    const Complex spin_phase = std::pow(Complex{0.0, 1.0}, k + 1);
    pk.v123[k] = {rack.original[k], k + 1, pk.v[k] * pk.w[k] * spin_phase};
  }

  // Step 4.
  pk.omega = draw_private_angle(rng);
  const double omega = pk.omega.total_rad();

  // Step 5.
  const auto plane = bmi::projection_from_basis({as_vector(e1), as_vector(e2)});
  for (int k = 0; k < 3; ++k) {
    kp.pub.antipodes[k] = -pk.points[k];
    pk.in_plane[k] = as_point(bmi::apply(plane.matrix(), as_vector(pk.points[k])));
  }

  // Step 6.
  const Complex key_point = kKeyScale * point_image(pk.points[0]) * std::polar(1.0, omega);
  pk.s = {std::llround(key_point.real()), std::llround(key_point.imag())};
  pk.radius = static_cast<double>(10 + seed % 91);
  const double e = lattice::count_lattice_points(pk.radius).error;
  kp.pub.g = pk.s + lattice::GaussianInt(std::llround(e));

  // Step 7.
  pk.pen_seed = rng.next();
  pk.hclique = pen(rack, static_cast<std::uint32_t>(rng.below(4)), pk.pen_seed);
  kp.pub.hclique_digest = hclique_digest(pk.hclique);
  const SpherePoint turned = rotate(pk.points[0], pk.normal, omega);
  kp.pub.projected = point_image(normalized(as_point(bmi::apply(plane.matrix(), as_vector(turned)))));
  kp.pub.params_version = params_version;
  return kp;
}

wire::Bytes serialize(const KeyPair& kp) {
  wire::Writer w;
  w.u64(kp.seed);
  w.u32(kp.params_version);
  const PrivateKey& pk = kp.priv;
  w.u32(static_cast<std::uint32_t>(pk.omega.omega_deg.size()));
  for (double d : pk.omega.omega_deg) w.f64(d);
  lattice::write(w, pk.s);
  w.u64(pk.pen_seed);
  write(w, pk.hclique);
  sphere::write(w, pk.normal);
  for (const auto& p : pk.points) sphere::write(w, p);
  for (const auto& p : pk.in_plane) sphere::write(w, p);
  for (const auto& z : pk.v) w.complex(z);
  for (const auto& z : pk.w) w.complex(z);
  for (const auto& t : pk.v123) {
    w.u8(static_cast<std::uint8_t>(t.color));
    w.u8(static_cast<std::uint8_t>(t.spin));
    w.complex(t.value);
  }
  w.f64(pk.radius);
  write(w, kp.pub);
  return std::move(w).take();
}

double top_coordinate(std::size_t i) { return (static_cast<double>(i) - 4.0) / 4.0; }

Complex top_value(const KeyPair& kp, Complex z) {
  const double r = kp.priv.radius;
  const double attenuation = 1.0 + lattice::count_lattice_points(r).error / (kPi * r * r);
  const Complex shifted = z * std::polar(1.0, kp.priv.omega.total_rad()) * attenuation;
  return std::conj(onion::onion_eval(OnionColor::Red, shifted));
}

Top derive_top(const KeyPair& kp) {
  Top top;
  for (std::size_t vi = 0; vi < kTopGridSide; ++vi)
    for (std::size_t ui = 0; ui < kTopGridSide; ++ui)
      top.grid[vi * kTopGridSide + ui] = top_value(kp, {top_coordinate(ui), top_coordinate(vi)});
  top.blip = kp.pub;
  return top;
}

Blip make_blip(const Top& top) { return top.blip; }

void write(wire::Writer& w, const Top& t) {
  for (const auto& z : t.grid) w.complex(z);
  write(w, t.blip);
}

Top read_top(wire::Reader& r) {
  Top t;
  for (auto& z : t.grid) z = r.complex();
  t.blip = read_blip(r);
  return t;
}

void write(wire::Writer& w, const Ciphertext& c) {
  w.bytes(c.nonce);
  w.u32(static_cast<std::uint32_t>(c.body.size()));
  w.bytes(c.body);
  w.bytes(c.tag);
}

Ciphertext read_ciphertext(wire::Reader& r) {
  Ciphertext c;
  c.nonce = r.fixed<16>();
  const std::uint32_t n = r.u32();
  if (n > r.remaining()) fail(ErrorCode::FrameCorrupt, "ciphertext length exceeds payload");
  c.body = r.bytes(n);
  c.tag = r.fixed<32>();
  return c;
}

Digest blip_key(const Blip& b) {
  wire::Writer w;
  write_bytes_tagged(w, "chrysalis/blip-key/v1");
  write(w, b);
  return sha256(w.data());
}

namespace {

wire::Bytes apply_keystream(const Digest& key, const Nonce& nonce, std::span<const std::uint8_t> in) {
  wire::Bytes out(in.begin(), in.end());
  for (std::size_t block = 0; block * 32 < out.size(); ++block) {
    wire::Writer w;
    w.bytes(key);
    w.bytes(nonce);
    w.u64(block);
    const Digest pad = sha256(w.data());
    for (std::size_t i = 0; i < 32 && block * 32 + i < out.size(); ++i) out[block * 32 + i] ^= pad[i];
  }
  return out;
}

Digest ciphertext_tag(const Digest& key, const Nonce& nonce, std::span<const std::uint8_t> body) {
  wire::Writer w;
  w.bytes(nonce);
  w.bytes(body);
  return hmac_sha256(key, w.data());
}

}  // namespace

Ciphertext encode(const Blip& recipient, std::span<const std::uint8_t> message, const Nonce& nonce) {
  const Digest key = blip_key(recipient);
  Ciphertext c;
  c.nonce = nonce;
  c.body = apply_keystream(key, nonce, message);
  c.tag = ciphertext_tag(key, nonce, c.body);
  return c;
}

wire::Bytes tap(const KeyPair& kp, const Blip& blip, const Ciphertext& c) {
  const PrivateKey& pk = kp.priv;
  if (blip.params_version != kp.params_version) fail(ErrorCode::VersionMismatch, "blip params_version differs");
  if (!equal_digest(blip.hclique_digest, hclique_digest(pk.hclique)))
    fail(ErrorCode::TamperDetected, "H-clique digest mismatch");
  const auto e = lattice::GaussianInt(std::llround(lattice::count_lattice_points(pk.radius).error));
  if (!(blip.g - e == pk.s)) fail(ErrorCode::TamperDetected, "noised key point does not strip to s");
  for (int k = 0; k < 3; ++k)
    if (!(blip.antipodes[k] == -pk.points[k])) fail(ErrorCode::TamperDetected, "antipode mismatch");
  const SpherePoint back = rotate(sphere::project_to_sphere(blip.projected), pk.normal, -pk.omega.total_rad());
  if (!(std::abs(point_image(back) - point_image(pk.points[0])) <= 1e-9))
    fail(ErrorCode::TamperDetected, "projected point does not rotate back to P1");
  if (!(blip == kp.pub)) fail(ErrorCode::TamperDetected, "blip differs from the key pair");

  const Digest key = blip_key(kp.pub);
  if (!equal_digest(ciphertext_tag(key, c.nonce, c.body), c.tag))
    fail(ErrorCode::TamperDetected, "ciphertext tag mismatch");
  return apply_keystream(key, c.nonce, c.body);
}

std::uint64_t permutations(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t p = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (p > std::numeric_limits<std::uint64_t>::max() / (n - i)) fail(ErrorCode::TooLarge, "permutation count overflows");
    p *= n - i;
  }
  return p;
}

KeyspaceCounts keyspace_counts() { return {permutations(8, 8), permutations(6, 6), permutations(216, 4)}; }

double keyspace_functional(double theta) {
  return static_cast<double>(keyspace_counts().clique_permutations) * std::sin(theta);
}

}  // namespace chrysalis::protocol
