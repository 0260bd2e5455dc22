#pragma once

// Big-endian payload primitives shared by every serializable type.

#include <array>
#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chrysalis/error.hpp"

namespace chrysalis::wire {

using Bytes = std::vector<std::uint8_t>;

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }

  void u32(std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }

  void u64(std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }

  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

  void complex(std::complex<double> z) {
    f64(z.real());
    f64(z.imag());
  }

  void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }

  const Bytes& data() const& { return out_; }
  Bytes&& take() && { return std::move(out_); }

 private:
  Bytes out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t u8() {
    need(1);
    return in_[pos_++];
  }

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | in_[pos_++];
    return v;
  }

  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | in_[pos_++];
    return v;
  }

  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  double f64() { return std::bit_cast<double>(u64()); }

  std::complex<double> complex() {
    const double re = f64();
    const double im = f64();
    return {re, im};
  }

  template <std::size_t N>
  std::array<std::uint8_t, N> fixed() {
    need(N);
    std::array<std::uint8_t, N> a{};
    for (std::size_t i = 0; i < N; ++i) a[i] = in_[pos_++];
    return a;
  }

  Bytes bytes(std::size_t n) {
    need(n);
    Bytes b(in_.begin() + static_cast<std::ptrdiff_t>(pos_), in_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
    pos_ += n;
    return b;
  }

  std::size_t remaining() const { return in_.size() - pos_; }
  bool done() const { return pos_ == in_.size(); }

  void expect_done() const {
    if (!done()) fail(ErrorCode::FrameCorrupt, "trailing bytes in payload");
  }

 private:
  void need(std::size_t n) const {
    if (in_.size() - pos_ < n) fail(ErrorCode::FrameCorrupt, "payload truncated");
  }

  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

std::string to_hex(std::span<const std::uint8_t> bytes);

}  // namespace chrysalis::wire
