#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace chrysalis::protocol {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);
Digest hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> data);
/// CRC-32, reflected polynomial 0xEDB88320.
std::uint32_t crc32(std::span<const std::uint8_t> data);

/// Constant-time comparison of equal-length byte strings.
bool equal_digest(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

}  // namespace chrysalis::protocol
