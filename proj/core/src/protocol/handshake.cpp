#include "chrysalis/protocol/handshake.hpp"

#include <string_view>

namespace chrysalis::protocol {

namespace {

constexpr std::uint8_t kLastErrorCode = static_cast<std::uint8_t>(ErrorCode::Io);

void tag(wire::Writer& w, std::string_view s) { w.bytes({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()}); }

}  // namespace

std::string_view to_string(SessionState s) noexcept {
  switch (s) {
    case SessionState::Start: return "Start";
    case SessionState::AwaitBlipPub: return "AwaitBlipPub";
    case SessionState::AwaitBlipReq: return "AwaitBlipReq";
    case SessionState::AwaitTopResp: return "AwaitTopResp";
    case SessionState::AwaitKeyConfirm: return "AwaitKeyConfirm";
    case SessionState::AwaitAck: return "AwaitAck";
    case SessionState::Authenticated: return "Authenticated";
    case SessionState::Closed: return "Closed";
  }
  return "Unknown";
}

Session::Session(Role role, std::uint64_t seed, std::uint32_t params_version)
    : role_(role),
      params_version_(params_version),
      keys_(keygen(params_version, seed)),
      state_(role == Role::Server ? SessionState::Start : SessionState::AwaitBlipPub) {}

std::optional<Digest> Session::session_key() const {
  if (state_ != SessionState::Authenticated) return std::nullopt;
  return key_;
}

wire::Bytes Session::emit(MsgType type, wire::Bytes payload) { return serialize(Frame{type, std::move(payload)}); }

std::vector<wire::Bytes> Session::close_with(ErrorCode code) {
  if (code == ErrorCode::TamperDetected) code = ErrorCode::AuthFailed;
  state_ = SessionState::Closed;
  last_error_ = code;
  key_.reset();
  return {emit(MsgType::Error, {static_cast<std::uint8_t>(code)})};
}

wire::Bytes Session::secret() const {
  wire::Writer w;
  tag(w, "chrysalis/secret/v1");
  w.u8(static_cast<std::uint8_t>(role_));
  w.u64(keys_.seed);
  write(w, *peer_blip_);
  const Digest d = sha256(w.data());
  return {d.begin(), d.end()};
}

Nonce Session::nonce() const {
  wire::Writer w;
  tag(w, "chrysalis/nonce/v1");
  w.u8(static_cast<std::uint8_t>(role_));
  w.u64(keys_.seed);
  write(w, *peer_blip_);
  const Digest d = sha256(w.data());
  Nonce n{};
  std::copy_n(d.begin(), n.size(), n.begin());
  return n;
}

void Session::derive_session_key() {
  const wire::Bytes& client = role_ == Role::Client ? my_secret_ : peer_secret_;
  const wire::Bytes& server = role_ == Role::Server ? my_secret_ : peer_secret_;
  wire::Writer s;
  s.bytes(client);
  s.bytes(server);
  const Digest shared = sha256(s.data());
  wire::Writer k;
  k.bytes(transcript_);
  k.bytes(shared);
  key_ = sha256(k.data());
}

Digest Session::confirm_tag(Role from) const {
  wire::Writer w;
  tag(w, from == Role::Client ? "chrysalis/confirm/client" : "chrysalis/confirm/server");
  return hmac_sha256(*key_, w.data());
}

std::vector<wire::Bytes> Session::step(std::optional<std::span<const std::uint8_t>> incoming) {
  if (state_ == SessionState::Closed) return {};
  if (!incoming) {
    if (state_ != SessionState::Start) return {};
    wire::Writer w;
    write(w, keys_.pub);
    auto out = emit(MsgType::BlipPub, std::move(w).take());
    transcript_.insert(transcript_.end(), out.begin(), out.end());
    state_ = SessionState::AwaitBlipReq;
    return {std::move(out)};
  }
  try {
    const Frame f = parse_frame(*incoming);
    if (f.type == MsgType::Error) {
      state_ = SessionState::Closed;
      key_.reset();
      const bool known = f.payload.size() == 1 && f.payload[0] <= kLastErrorCode;
      last_error_ = known ? static_cast<ErrorCode>(f.payload[0]) : ErrorCode::ProtocolViolation;
      return {};
    }
    return handle(f, *incoming);
  } catch (const Error& e) {
    return close_with(e.code());
  }
}

std::vector<wire::Bytes> Session::handle(const Frame& f, std::span<const std::uint8_t> raw) {
  auto expect = [&](SessionState s, MsgType t) {
    if (state_ != s || f.type != t) fail(ErrorCode::ProtocolViolation, "unexpected message type");
  };
  auto record = [&](std::span<const std::uint8_t> bytes) { transcript_.insert(transcript_.end(), bytes.begin(), bytes.end()); };
  wire::Reader r(f.payload);

  if (role_ == Role::Client && state_ == SessionState::AwaitBlipPub) {
    expect(SessionState::AwaitBlipPub, MsgType::BlipPub);
    Blip alice = read_blip(r);
    r.expect_done();
    if (alice.params_version != params_version_) fail(ErrorCode::VersionMismatch, "peer params_version differs");
    record(raw);
    peer_blip_ = std::move(alice);
    my_secret_ = secret();
    wire::Writer w;
    write(w, keys_.pub);
    write(w, encode(*peer_blip_, my_secret_, nonce()));
    auto out = emit(MsgType::BlipReq, std::move(w).take());
    record(out);
    state_ = SessionState::AwaitTopResp;
    return {std::move(out)};
  }

  if (role_ == Role::Server && state_ == SessionState::AwaitBlipReq) {
    expect(SessionState::AwaitBlipReq, MsgType::BlipReq);
    Blip bob = read_blip(r);
    const Ciphertext c = read_ciphertext(r);
    r.expect_done();
    if (bob.params_version != params_version_) fail(ErrorCode::VersionMismatch, "peer params_version differs");
    record(raw);
    peer_secret_ = tap(keys_, keys_.pub, c);
    peer_blip_ = std::move(bob);
    my_secret_ = secret();
    wire::Writer w;
    write(w, derive_top(keys_));
    write(w, encode(*peer_blip_, my_secret_, nonce()));
    auto out = emit(MsgType::TopResp, std::move(w).take());
    record(out);
    derive_session_key();
    state_ = SessionState::AwaitKeyConfirm;
    return {std::move(out)};
  }

  if (role_ == Role::Client && state_ == SessionState::AwaitTopResp) {
    expect(SessionState::AwaitTopResp, MsgType::TopResp);
    const Top top = read_top(r);
    const Ciphertext c = read_ciphertext(r);
    r.expect_done();
    if (!(make_blip(top) == *peer_blip_)) fail(ErrorCode::AuthFailed, "TOP does not carry the announced BLIP");
    record(raw);
    peer_secret_ = tap(keys_, keys_.pub, c);
    derive_session_key();
    const Digest t = confirm_tag(Role::Client);
    state_ = SessionState::AwaitAck;
    return {emit(MsgType::KeyConfirm, {t.begin(), t.end()})};
  }

  if (role_ == Role::Server && state_ == SessionState::AwaitKeyConfirm) {
    expect(SessionState::AwaitKeyConfirm, MsgType::KeyConfirm);
    if (!equal_digest(f.payload, confirm_tag(Role::Client))) fail(ErrorCode::AuthFailed, "key confirmation mismatch");
    const HClique& h = keys_.priv.hclique;
    if (!equal_digest(hclique_digest(h), keys_.pub.hclique_digest) ||
        !is_homeomorphic(h.graph, rack_default(keys_.seed).graph))
      fail(ErrorCode::AuthFailed, "H-clique no longer matches its PEN origin");
    const Digest t = confirm_tag(Role::Server);
    state_ = SessionState::Authenticated;
    return {emit(MsgType::Ack, {t.begin(), t.end()})};
  }

  if (role_ == Role::Client && state_ == SessionState::AwaitAck) {
    expect(SessionState::AwaitAck, MsgType::Ack);
    if (!equal_digest(f.payload, confirm_tag(Role::Server))) fail(ErrorCode::AuthFailed, "acknowledgement mismatch");
    state_ = SessionState::Authenticated;
    return {};
  }

  fail(ErrorCode::ProtocolViolation, "message received in state " + std::string(to_string(state_)));
}

std::vector<wire::Bytes> handshake_step(Session& s, std::optional<std::span<const std::uint8_t>> incoming) {
  return s.step(incoming);
}

}  // namespace chrysalis::protocol
