#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "chrysalis/protocol/handshake.hpp"

namespace chrysalis::protocol {

/// A connected stream socket carrying whole frames. Owns the descriptor.
class FramedStream {
 public:
  explicit FramedStream(int fd) : fd_(fd) {}
  FramedStream(FramedStream&& o) noexcept : fd_(o.fd_) { o.fd_ = -1; }
  FramedStream& operator=(FramedStream&& o) noexcept;
  FramedStream(const FramedStream&) = delete;
  FramedStream& operator=(const FramedStream&) = delete;
  ~FramedStream();

  static FramedStream connect(const std::string& host, std::uint16_t port);

  void send(std::span<const std::uint8_t> frame);
  /// Reads one frame's raw bytes. A header that fails validation is returned
  /// as is, so the session can reject it. Throws Io on EOF or socket errors.
  wire::Bytes receive();

 private:
  void read_exact(std::uint8_t* out, std::size_t n);
  int fd_;
};

class Listener {
 public:
  /// Binds 127.0.0.1; port 0 picks an ephemeral port.
  explicit Listener(std::uint16_t port);
  Listener(const Listener&) = delete;
  Listener& operator=(const Listener&) = delete;
  ~Listener();

  std::uint16_t port() const { return port_; }
  FramedStream accept();

 private:
  int fd_;
  std::uint16_t port_;
};

/// Drives `s` over `stream` until it authenticates or closes. Returns the
/// number of frames sent and received.
std::size_t run_session(Session& s, FramedStream& stream);

}  // namespace chrysalis::protocol
