#include "chrysalis/protocol/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstring>

namespace chrysalis::protocol {

namespace {

[[noreturn]] void fail_errno(const std::string& what) { fail(ErrorCode::Io, what + ": " + std::strerror(errno)); }

}  // namespace

FramedStream& FramedStream::operator=(FramedStream&& o) noexcept {
  if (this != &o) {
    if (fd_ >= 0) ::close(fd_);
    fd_ = o.fd_;
    o.fd_ = -1;
  }
  return *this;
}

FramedStream::~FramedStream() {
  if (fd_ >= 0) ::close(fd_);
}

FramedStream FramedStream::connect(const std::string& host, std::uint16_t port) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  const std::string service = std::to_string(port);
  if (const int rc = ::getaddrinfo(host.c_str(), service.c_str(), &hints, &res); rc != 0)
    fail(ErrorCode::Io, "cannot resolve " + host + ": " + ::gai_strerror(rc));
  int fd = -1;
  for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(res);
  if (fd < 0) fail_errno("cannot connect to " + host + ":" + service);
  return FramedStream(fd);
}

void FramedStream::send(std::span<const std::uint8_t> frame) {
  std::size_t sent = 0;
  while (sent < frame.size()) {
    const ssize_t n = ::send(fd_, frame.data() + sent, frame.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      fail_errno("send failed");
    }
    sent += static_cast<std::size_t>(n);
  }
}

void FramedStream::read_exact(std::uint8_t* out, std::size_t n) {
  std::size_t got = 0;
  while (got < n) {
    const ssize_t k = ::recv(fd_, out + got, n - got, 0);
    if (k == 0) fail(ErrorCode::Io, "peer closed the connection");
    if (k < 0) {
      if (errno == EINTR) continue;
      fail_errno("recv failed");
    }
    got += static_cast<std::size_t>(k);
  }
}

wire::Bytes FramedStream::receive() {
  std::array<std::uint8_t, kFrameHeaderSize> header{};
  read_exact(header.data(), header.size());
  std::uint32_t n = 0;
  try {
    n = frame_payload_length(header);
  } catch (const Error&) {
    return {header.begin(), header.end()};
  }
  wire::Bytes frame(kFrameHeaderSize + n + kFrameTrailerSize);
  std::copy(header.begin(), header.end(), frame.begin());
  read_exact(frame.data() + kFrameHeaderSize, n + kFrameTrailerSize);
  return frame;
}

Listener::Listener(std::uint16_t port) : fd_(::socket(AF_INET, SOCK_STREAM, 0)), port_(port) {
  if (fd_ < 0) fail_errno("socket failed");
  const int one = 1;
  ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(fd_, 8) != 0) {
    const int saved = errno;
    ::close(fd_);
    errno = saved;
    fail_errno("cannot listen on port " + std::to_string(port));
  }
  socklen_t len = sizeof addr;
  ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

Listener::~Listener() { ::close(fd_); }

FramedStream Listener::accept() {
  for (;;) {
    const int fd = ::accept(fd_, nullptr, nullptr);
    if (fd >= 0) return FramedStream(fd);
    if (errno != EINTR) fail_errno("accept failed");
  }
}

std::size_t run_session(Session& s, FramedStream& stream) {
  std::size_t frames = 0;
  auto flush = [&](const std::vector<wire::Bytes>& out) {
    for (const auto& f : out) {
      stream.send(f);
      ++frames;
    }
  };
  flush(s.step(std::nullopt));
  while (!s.finished()) {
    const wire::Bytes in = stream.receive();
    ++frames;
    flush(s.step(in));
  }
  return frames;
}

}  // namespace chrysalis::protocol
