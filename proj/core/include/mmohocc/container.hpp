#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "mmohocc/key_schedule.hpp"

namespace mmohocc {

// Encrypted file layout:
//   "MMOH" | version 0x01 | variant (0x00 = 128, 0x01 = 256, 0x02 = 512)
//   | IV (8 or 16 octets) | ciphertext
inline constexpr std::array<std::uint8_t, 4> kContainerMagic = {'M', 'M', 'O', 'H'};
inline constexpr std::uint8_t kContainerVersion = 0x01;

std::uint8_t variant_code(Variant v) noexcept;

struct ContainerHeader {
  Variant variant;
  InitVector iv;
  std::size_t size;  // octets before the ciphertext
};

// Throws FormatError on bad magic, version, variant code or truncation.
ContainerHeader parse_header(std::span<const std::uint8_t> container);

std::vector<std::uint8_t> seal(const MasterKey& key, const InitVector& iv,
                               std::span<const std::uint8_t> plaintext);

// Throws FormatError for malformed input and KeyFormatError when the key's
// variant differs from the header's.
std::vector<std::uint8_t> open(const MasterKey& key,
                               std::span<const std::uint8_t> container);

}  // namespace mmohocc
