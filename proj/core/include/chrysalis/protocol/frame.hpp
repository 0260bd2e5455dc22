#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "chrysalis/wire.hpp"

namespace chrysalis::protocol {

inline constexpr std::array<std::uint8_t, 4> kFrameMagic{'C', 'H', 'R', 'Y'};
inline constexpr std::uint8_t kFrameVersion = 0x01;
inline constexpr std::size_t kFrameHeaderSize = 10;  // magic, version, type, length
inline constexpr std::size_t kFrameTrailerSize = 4;  // CRC-32
inline constexpr std::uint32_t kMaxPayload = 1U << 20;

enum class MsgType : std::uint8_t {
  Hello = 0x01,  // reserved
  BlipPub = 0x02,
  BlipReq = 0x03,
  TopResp = 0x04,
  KeyConfirm = 0x05,
  Ack = 0x06,
  Error = 0x07,
};

struct Frame {
  MsgType type;
  wire::Bytes payload;

  friend bool operator==(const Frame&, const Frame&) = default;
};

wire::Bytes serialize(const Frame& f);
/// Throws FrameCorrupt on bad magic, unknown type, length mismatch or CRC
/// failure, and VersionMismatch on a foreign version byte.
Frame parse_frame(std::span<const std::uint8_t> bytes);
/// Payload length announced by a header, validated against kMaxPayload.
std::uint32_t frame_payload_length(std::span<const std::uint8_t, kFrameHeaderSize> header);

}  // namespace chrysalis::protocol
