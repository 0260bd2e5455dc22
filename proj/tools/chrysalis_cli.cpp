#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "chrysalis/harness/verify.hpp"
#include "chrysalis/lattice.hpp"
#include "chrysalis/protocol/keys.hpp"
#include "chrysalis/protocol/net.hpp"

namespace {

using namespace chrysalis;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

enum class Format { Table, Tsv };

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

using Fields = std::vector<std::pair<std::string, std::string>>;

void print_fields(const Fields& fields, Format fmt) {
  std::size_t width = 0;
  for (const auto& [k, v] : fields) width = std::max(width, k.size());
  for (const auto& [k, v] : fields) {
    if (fmt == Format::Tsv)
      std::cout << k << '\t' << v << '\n';
    else
      std::cout << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
}

int run_verify(Format fmt) {
  const auto report = harness::verify_suite();
  if (fmt == Format::Tsv) {
    std::cout << "name\tpaper\tcomputed\tdiff\tpass\n";
    for (const auto& r : report.rows)
      std::cout << r.name << '\t' << num(r.printed_value) << '\t' << num(r.computed) << '\t' << num(r.abs_diff) << '\t'
                << (r.pass ? "pass" : "FAIL") << '\n';
  } else {
    std::printf("%-40s %16s %16s %12s %10s  %s\n", "name", "printed", "computed", "diff", "tol", "result");
    for (const auto& r : report.rows)
      std::printf("%-40s %16s %16s %12s %10s  %s\n", r.name.c_str(), num(r.printed_value).c_str(),
                  num(r.computed).c_str(), num(r.abs_diff).c_str(), num(r.tolerance).c_str(),
                  r.pass ? "pass" : "FAIL");
  }
  return report.all_pass() ? kExitOk : kExitFailed;
}

int run_keygen(std::uint64_t seed, const std::string& out, Format fmt) {
  const auto kp = protocol::keygen(protocol::kParamsVersion, seed);
  const auto pair_bytes = protocol::serialize(kp);
  const auto blip = protocol::serialize(kp.pub);
  print_fields({{"seed", std::to_string(seed)},
                {"params_version", std::to_string(kp.params_version)},
                {"blip", wire::to_hex(blip)},
                {"blip_key", wire::to_hex(protocol::blip_key(kp.pub))},
                {"hclique_digest", wire::to_hex(kp.pub.hclique_digest)},
                {"hclique_nodes", std::to_string(kp.priv.hclique.graph.node_count())},
                {"g", std::to_string(kp.pub.g.a) + " " + std::to_string(kp.pub.g.b)},
                {"projected", num(kp.pub.projected.real()) + " " + num(kp.pub.projected.imag())},
                {"keypair_sha256", wire::to_hex(protocol::sha256(pair_bytes))}},
               fmt);
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    f.write(reinterpret_cast<const char*>(pair_bytes.data()), static_cast<std::streamsize>(pair_bytes.size()));
    if (!f) {
      std::cerr << "cannot write " << out << '\n';
      return kExitFailed;
    }
  }
  return kExitOk;
}

int report_session(const protocol::Session& s, std::size_t frames, Format fmt) {
  Fields fields{{"state", std::string(protocol::to_string(s.state()))}, {"frames", std::to_string(frames)}};
  if (auto key = s.session_key()) fields.emplace_back("session_key", wire::to_hex(*key));
  if (auto err = s.last_error()) fields.emplace_back("error", std::string(to_string(*err)));
  print_fields(fields, fmt);
  return s.state() == protocol::SessionState::Authenticated ? kExitOk : kExitFailed;
}

int run_serve(std::uint16_t port, std::uint64_t seed, Format fmt) {
  protocol::Listener listener(port);
  std::cerr << "listening on 127.0.0.1:" << listener.port() << '\n';
  auto stream = listener.accept();
  protocol::Session s(protocol::Role::Server, seed);
  const auto frames = protocol::run_session(s, stream);
  return report_session(s, frames, fmt);
}

int run_connect(const std::string& host, std::uint16_t port, std::uint64_t seed, Format fmt) {
  auto stream = protocol::FramedStream::connect(host, port);
  protocol::Session s(protocol::Role::Client, seed);
  const auto frames = protocol::run_session(s, stream);
  return report_session(s, frames, fmt);
}

int run_count(double radius, Format fmt) {
  const auto c = lattice::count_lattice_points(radius);
  print_fields({{"r", num(c.r)},
                {"N", std::to_string(c.count)},
                {"E", num(c.error)},
                {"abs_E_over_sqrt_r", c.r > 0 ? num(std::abs(c.error) / std::sqrt(c.r)) : "inf"}},
               fmt);
  return kExitOk;
}

int run_quadrature(const std::string& curve, Format fmt) {
  const auto q = curve == "gauss"      ? harness::gaussian_arc_length()
                 : curve == "geodesic" ? harness::geodesic_arc_length()
                                       : harness::blue_definite_integral();
  print_fields({{"curve", curve},
                {"value", num(q.value)},
                {"error_estimate", num(q.abs_error_estimate)},
                {"evaluations", std::to_string(q.evaluations)}},
               fmt);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemann-sphere geometry, onion constants and the Chrysalis toy handshake", "chrysalis"};
  app.fallthrough();
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "tsv"}));

  auto* verify = app.add_subcommand("verify", "Recompute every printed constant");

  std::uint64_t seed = 0;
  std::string out;
  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--seed", seed, "64-bit seed")->required()->envname("CHRYSALIS_SEED");
  keygen->add_option("--out", out, "Write the serialized key pair here");

  std::uint16_t port = 0;
  auto* serve = app.add_subcommand("serve", "Accept one handshake as Alice");
  serve->add_option("--port", port, "TCP port on 127.0.0.1")->required();
  serve->add_option("--seed", seed, "64-bit seed")->required()->envname("CHRYSALIS_SEED");

  std::string host = "127.0.0.1";
  auto* connect = app.add_subcommand("connect", "Run one handshake as Bob");
  connect->add_option("--host", host, "Server host");
  connect->add_option("--port", port, "Server port")->required();
  connect->add_option("--seed", seed, "64-bit seed")->required()->envname("CHRYSALIS_SEED");

  double radius = 0.0;
  auto* count = app.add_subcommand("count-lattice", "Count lattice points in a disc");
  count->add_option("--radius", radius, "Disc radius")->required();

  std::string curve;
  auto* quad = app.add_subcommand("quadrature", "Integrate one of the printed arc-length integrands");
  quad->add_option("--curve", curve, "Integrand")->required()->check(CLI::IsMember({"gauss", "geodesic", "blue"}));

  app.require_subcommand(1);

  if (argc < 2) {
    std::cerr << app.help();
    return kExitUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  const Format fmt = format == "tsv" ? Format::Tsv : Format::Table;
  try {
    if (*verify) return run_verify(fmt);
    if (*keygen) return run_keygen(seed, out, fmt);
    if (*serve) return run_serve(port, seed, fmt);
    if (*connect) return run_connect(host, port, seed, fmt);
    if (*count) return run_count(radius, fmt);
    if (*quad) return run_quadrature(curve, fmt);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
