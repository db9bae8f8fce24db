#include "mmohocc/rc4.hpp"

#include <utility>

#include "mmohocc/errors.hpp"

namespace mmohocc {

Rc4::Rc4(std::span<const std::uint8_t> key) {
  if (key.size() < 5 || key.size() > 32) {
    throw KeyFormatError("RC4 key must be 5..32 octets");
  }
  for (int k = 0; k < 256; ++k) s_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(k);
  std::uint8_t j = 0;
  for (std::size_t k = 0; k < 256; ++k) {
    j = static_cast<std::uint8_t>(j + s_[k] + key[k % key.size()]);
    std::swap(s_[k], s_[j]);
  }
}

void Rc4::generate(std::span<std::uint8_t> out) noexcept {
  for (auto& b : out) b = next();
}

void Rc4::apply(std::span<std::uint8_t> data) noexcept {
  for (auto& b : data) b ^= next();
}

std::vector<std::uint8_t> rc4_keystream(std::span<const std::uint8_t> key, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  Rc4(key).generate(out);
  return out;
}

}  // namespace mmohocc
