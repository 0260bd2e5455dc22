#include "chrysalis/protocol/frame.hpp"

#include <algorithm>

#include "chrysalis/protocol/digest.hpp"

namespace chrysalis::protocol {

wire::Bytes serialize(const Frame& f) {
  if (f.payload.size() > kMaxPayload) fail(ErrorCode::TooLarge, "frame payload exceeds 1 MiB");
  wire::Writer w;
  w.bytes(kFrameMagic);
  w.u8(kFrameVersion);
  w.u8(static_cast<std::uint8_t>(f.type));
  w.u32(static_cast<std::uint32_t>(f.payload.size()));
  w.bytes(f.payload);
  w.u32(crc32(f.payload));
  return std::move(w).take();
}

std::uint32_t frame_payload_length(std::span<const std::uint8_t, kFrameHeaderSize> header) {
  if (!std::equal(kFrameMagic.begin(), kFrameMagic.end(), header.begin()))
    fail(ErrorCode::FrameCorrupt, "bad frame magic");
  if (header[4] != kFrameVersion) fail(ErrorCode::VersionMismatch, "unsupported frame version");
  if (header[5] < 0x01 || header[5] > 0x07) fail(ErrorCode::FrameCorrupt, "unknown message type");
  wire::Reader r(header.subspan<6>());
  const std::uint32_t n = r.u32();
  if (n > kMaxPayload) fail(ErrorCode::FrameCorrupt, "frame payload exceeds 1 MiB");
  return n;
}

Frame parse_frame(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kFrameHeaderSize + kFrameTrailerSize) fail(ErrorCode::FrameCorrupt, "frame too short");
  const std::uint32_t n = frame_payload_length(bytes.first<kFrameHeaderSize>());
  if (bytes.size() != kFrameHeaderSize + n + kFrameTrailerSize) fail(ErrorCode::FrameCorrupt, "frame length mismatch");
  wire::Reader r(bytes.subspan(kFrameHeaderSize));
  Frame f{static_cast<MsgType>(bytes[5]), r.bytes(n)};
  if (r.u32() != crc32(f.payload)) fail(ErrorCode::FrameCorrupt, "frame CRC mismatch");
  return f;
}

}  // namespace chrysalis::protocol
