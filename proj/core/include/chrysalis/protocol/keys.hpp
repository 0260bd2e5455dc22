#pragma once

// Rack, PEN, key generation, TOP/BLIP and TAP. Every construction here is a
// versioned interpretation (params_version 1); none carries a security claim.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "chrysalis/lattice.hpp"
#include "chrysalis/onion.hpp"
#include "chrysalis/protocol/digest.hpp"
#include "chrysalis/protocol/graph.hpp"
#include "chrysalis/protocol/rng.hpp"
#include "chrysalis/sphere.hpp"
#include "chrysalis/wire.hpp"

namespace chrysalis::protocol {

using Complex = std::complex<double>;
using onion::OnionColor;

inline constexpr std::uint32_t kParamsVersion = 1;
inline constexpr double kAngleSumCapDeg = 179.21;
inline constexpr double kKeyScale = 1e4;
inline constexpr std::size_t kTopGridSide = 8;

/// Red for every color: Green and Blue map to their derivative, Red stays.
OnionColor normalize_color(OnionColor c);

struct Rack {
  std::uint64_t seed = 0;
  std::vector<OnionColor> original;  // seeded order of Green, Red, Blue
  std::vector<OnionColor> onions;    // after normalization
  Graph graph;                       // node k is onion k
};

/// Three onions on the path graph 0 - 1 - 2.
Rack rack_default(std::uint64_t seed);
void write(wire::Writer& w, const Rack& rack);

enum class LabelKind : std::uint8_t { OnionRoot = 0, ParentX = 1, ParentY = 2 };

struct NodeLabel {
  LabelKind kind;
  double argument;  // root index for OnionRoot, the sample argument otherwise
  Complex value;
};

struct HClique {
  Graph graph;
  std::vector<NodeLabel> labels;
  /// One node path per rack edge, endpoints included; the subdivision witness.
  std::vector<std::vector<std::uint32_t>> witness;
  Digest origin;  // SHA-256 of the rack serialization
  std::uint32_t rack_nodes = 0;
  std::uint32_t subdivisions = 0;  // nodes inserted before the extra ones
};

/// Subdivides each rack edge 0-2 times, then inserts `extra_nodes` more nodes
/// on edges chosen uniformly from the current graph.
HClique pen(const Rack& rack, std::uint32_t extra_nodes, std::uint64_t seed);
/// Node ids added by PEN, ascending.
std::vector<std::uint32_t> inserted_nodes(const HClique& h);

void write(wire::Writer& w, const HClique& h);
Digest hclique_digest(const HClique& h);

struct PrivateAngle {
  std::vector<double> omega_deg;
  double total_deg() const;
  double total_rad() const;
};

PrivateAngle draw_private_angle(SplitMix64& rng, std::size_t components = 3);

struct V123 {
  OnionColor color;
  int spin;  // Pauli label 1, 2, 3
  Complex value;
};

struct Blip {
  std::array<sphere::SpherePoint, 3> antipodes;
  Complex projected;
  lattice::GaussianInt g;
  Digest hclique_digest;
  std::uint32_t params_version = kParamsVersion;

  friend bool operator==(const Blip&, const Blip&) = default;
};

void write(wire::Writer& w, const Blip& b);
/// Throws FrameCorrupt on malformed or non-unit antipodes.
Blip read_blip(wire::Reader& r);
wire::Bytes serialize(const Blip& b);

struct PrivateKey {
  PrivateAngle omega;
  lattice::GaussianInt s;
  std::uint64_t pen_seed = 0;
  HClique hclique;
  sphere::SpherePoint normal;                 // plane of the great circle
  std::array<sphere::SpherePoint, 3> points;  // P1, P2, P3 on the circle
  std::array<sphere::SpherePoint, 3> in_plane;  // orthogonal projections onto the plane
  std::array<Complex, 3> v;
  std::array<Complex, 3> w;
  std::array<V123, 3> v123;
  double radius = 0.0;
};

struct KeyPair {
  std::uint64_t seed = 0;
  std::uint32_t params_version = kParamsVersion;
  PrivateKey priv;
  Blip pub;
};

KeyPair keygen(std::uint32_t params_version, std::uint64_t seed);
wire::Bytes serialize(const KeyPair& kp);

/// Rotation of p about the unit axis n by angle (radians).
sphere::SpherePoint rotate(const sphere::SpherePoint& p, const sphere::SpherePoint& n, double angle);

struct Top {
  std::array<Complex, kTopGridSide * kTopGridSide> grid;  // row-major in v, then u
  Blip blip;
};

/// Grid coordinate (i - 4) / 4, so index 4 is the anchor 0.
double top_coordinate(std::size_t i);
/// conj of the Blue gradient (the Red onion) at z e^{i omega} scaled by 1 + E(r)/(pi r^2).
Complex top_value(const KeyPair& kp, Complex z);
Top derive_top(const KeyPair& kp);
Blip make_blip(const Top& top);
void write(wire::Writer& w, const Top& t);
Top read_top(wire::Reader& r);

using Nonce = std::array<std::uint8_t, 16>;

struct Ciphertext {
  Nonce nonce{};
  wire::Bytes body;
  Digest tag{};
};

void write(wire::Writer& w, const Ciphertext& c);
Ciphertext read_ciphertext(wire::Reader& r);

/// Symmetric key bound to the public blip.
Digest blip_key(const Blip& b);
Ciphertext encode(const Blip& recipient, std::span<const std::uint8_t> message, const Nonce& nonce);
/// Checks the blip against the private key, then authenticates and decrypts.
/// Throws VersionMismatch or TamperDetected.
wire::Bytes tap(const KeyPair& kp, const Blip& blip, const Ciphertext& c);

struct KeyspaceCounts {
  std::uint64_t eight_element;        // 8!
  std::uint64_t six_element;          // 6!
  std::uint64_t clique_permutations;  // perm(216, 4)
};

std::uint64_t permutations(std::uint64_t n, std::uint64_t k);
KeyspaceCounts keyspace_counts();
double keyspace_functional(double theta);

}  // namespace chrysalis::protocol
