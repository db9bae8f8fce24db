#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace mmohocc {

// FIPS 180-4 digests.
std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data);
std::array<std::uint8_t, 64> sha512(std::span<const std::uint8_t> data);

}  // namespace mmohocc
