#include "mmohocc/hash.hpp"

#include <openssl/sha.h>

namespace mmohocc {

std::array<std::uint8_t, 32> sha256(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, 32> out{};
  SHA256(data.data(), data.size(), out.data());
  return out;
}

std::array<std::uint8_t, 64> sha512(std::span<const std::uint8_t> data) {
  std::array<std::uint8_t, 64> out{};
  SHA512(data.data(), data.size(), out.data());
  return out;
}

}  // namespace mmohocc
