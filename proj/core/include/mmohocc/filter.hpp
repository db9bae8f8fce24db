#pragma once

#include <cmath>
#include <cstdint>

namespace mmohocc {

// Filter output: p = a ^ c, q = b ^ d for the four octets a b c d (high to
// low) of the 32-bit state word.
struct KeystreamWord {
  std::uint8_t p = 0;
  std::uint8_t q = 0;

  constexpr std::uint16_t packed() const noexcept {
    return static_cast<std::uint16_t>(p << 8 | q);
  }
  friend constexpr bool operator==(KeystreamWord, KeystreamWord) = default;
};

// The same XOR-fold on a word of `width` bits (4, 8, 16 or 32) split into four
// equal fields; returns (a ^ c) << (width / 4) | (b ^ d). extract_word uses
// width 32. Narrow widths exist so the fold's preimage structure can be
// enumerated exhaustively.
constexpr std::uint32_t fold_filter(std::uint32_t w, unsigned width) noexcept {
  const unsigned f = width / 4;
  const std::uint32_t mask = (f == 8) ? 0xFFu : ((1u << f) - 1u);
  const std::uint32_t a = (w >> (3 * f)) & mask;
  const std::uint32_t b = (w >> (2 * f)) & mask;
  const std::uint32_t c = (w >> f) & mask;
  const std::uint32_t d = w & mask;
  return (a ^ c) << f | (b ^ d);
}

// Scaled state word: floor(|x| * 2^52) mod 2^32. Requires |x| < 4.
inline std::uint32_t state_word(double x) noexcept {
  // Scaling by a power of two is exact, and the conversion truncates.
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(std::fabs(x) * 0x1p52));
}

inline KeystreamWord extract_word(double x) noexcept {
  const std::uint32_t w = state_word(x);
  const auto folded = static_cast<std::uint16_t>(fold_filter(w, 32));
  return KeystreamWord{static_cast<std::uint8_t>(folded >> 8),
                       static_cast<std::uint8_t>(folded & 0xFF)};
}

}  // namespace mmohocc
