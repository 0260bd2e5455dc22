#include <benchmark/benchmark.h>

#include <random>

#include "chrysalis/bmi.hpp"
#include "chrysalis/harness/verify.hpp"
#include "chrysalis/lattice.hpp"
#include "chrysalis/protocol/frame.hpp"
#include "chrysalis/protocol/handshake.hpp"

using namespace chrysalis;

static void BM_GaussianArcLength(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(harness::gaussian_arc_length().value);
}
BENCHMARK(BM_GaussianArcLength);

static void BM_GeodesicArcLength(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(harness::geodesic_arc_length().value);
}
BENCHMARK(BM_GeodesicArcLength);

static void BM_VerifySuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(harness::verify_suite().all_pass());
}
BENCHMARK(BM_VerifySuite)->Unit(benchmark::kMillisecond);

static void BM_LatticeCount(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lattice::count_lattice_points(r).count);
}
BENCHMARK(BM_LatticeCount)->Arg(100)->Arg(10000)->Arg(1000000);

static void BM_LatticeCountParallel(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lattice::count_lattice_points_parallel(1e7, workers).count);
}
BENCHMARK(BM_LatticeCountParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_GaussianGcd(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> u(-1000000000, 1000000000);
  const lattice::GaussianInt x{u(rng), u(rng)}, y{u(rng), u(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(lattice::gi_gcd(x, y));
}
BENCHMARK(BM_GaussianGcd);

static void BM_JacobiEigen(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  const bmi::SymmetricMatrix s(m);
  for (auto _ : state) benchmark::DoNotOptimize(bmi::jacobi_eigen(s).values);
}
BENCHMARK(BM_JacobiEigen)->Arg(4)->Arg(16)->Arg(64);

static void BM_BilinearMax(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = u(rng);
  const bmi::BilinearInstance inst{a};
  for (auto _ : state) benchmark::DoNotOptimize(bmi::bilinear_max_pm1(inst).value);
}
BENCHMARK(BM_BilinearMax)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Keygen(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(protocol::keygen(protocol::kParamsVersion, seed++).pub.g);
}
BENCHMARK(BM_Keygen);

static void BM_Handshake(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    protocol::Session server(protocol::Role::Server, seed), client(protocol::Role::Client, seed + 1);
    seed += 2;
    auto in_flight = server.step(std::nullopt);
    bool to_client = true;
    while (!in_flight.empty()) {
      std::vector<wire::Bytes> next;
      for (const auto& f : in_flight) {
        auto out = (to_client ? client : server).step(std::span<const std::uint8_t>(f));
        next.insert(next.end(), out.begin(), out.end());
      }
      in_flight = std::move(next);
      to_client = !to_client;
    }
    benchmark::DoNotOptimize(server.session_key());
  }
}
BENCHMARK(BM_Handshake);

static void BM_FrameRoundTrip(benchmark::State& state) {
  const protocol::Frame f{protocol::MsgType::TopResp, wire::Bytes(static_cast<std::size_t>(state.range(0)), 0xA5)};
  for (auto _ : state) benchmark::DoNotOptimize(protocol::parse_frame(protocol::serialize(f)));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_FrameRoundTrip)->Arg(256)->Arg(65536)->Arg(1 << 20);

BENCHMARK_MAIN();
