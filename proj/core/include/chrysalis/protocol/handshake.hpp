#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chrysalis/protocol/frame.hpp"
#include "chrysalis/protocol/keys.hpp"

namespace chrysalis::protocol {

enum class Role { Server, Client };  // Alice, Bob

enum class SessionState {
  Start,
  AwaitBlipPub,
  AwaitBlipReq,
  AwaitTopResp,
  AwaitKeyConfirm,
  AwaitAck,
  Authenticated,
  Closed,
};

std::string_view to_string(SessionState s) noexcept;

/// One side of the five-frame exchange
///   BLIP_PUB (A->B), BLIP_REQ (B->A), TOP_RESP (A->B), KEY_CONFIRM (B->A), ACK (A->B).
/// Any rejected frame emits a single ERROR frame and closes the session.
/// Not thread-safe; drive each session from one executor.
class Session {
 public:
  Session(Role role, std::uint64_t seed, std::uint32_t params_version = kParamsVersion);

  /// Feeds one raw frame, or nothing to start the server side, and returns
  /// the raw frames to send.
  std::vector<wire::Bytes> step(std::optional<std::span<const std::uint8_t>> incoming);

  Role role() const { return role_; }
  SessionState state() const { return state_; }
  bool finished() const { return state_ == SessionState::Authenticated || state_ == SessionState::Closed; }
  std::optional<ErrorCode> last_error() const { return last_error_; }
  /// Present once Authenticated.
  std::optional<Digest> session_key() const;
  const KeyPair& keys() const { return keys_; }

 private:
  std::vector<wire::Bytes> handle(const Frame& f, std::span<const std::uint8_t> raw);
  std::vector<wire::Bytes> close_with(ErrorCode code);
  wire::Bytes emit(MsgType type, wire::Bytes payload);
  wire::Bytes secret() const;
  Nonce nonce() const;
  void derive_session_key();
  Digest confirm_tag(Role from) const;

  Role role_;
  std::uint32_t params_version_;
  KeyPair keys_;
  SessionState state_;
  std::optional<ErrorCode> last_error_;
  std::optional<Blip> peer_blip_;
  wire::Bytes my_secret_;
  wire::Bytes peer_secret_;
  wire::Bytes transcript_;
  std::optional<Digest> key_;
};

std::vector<wire::Bytes> handshake_step(Session& s, std::optional<std::span<const std::uint8_t>> incoming);

}  // namespace chrysalis::protocol
