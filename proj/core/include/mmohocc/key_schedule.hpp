#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mmohocc/chaos.hpp"

namespace mmohocc {

inline constexpr double kHoppingSkew = 0.19;

class MasterKey {
 public:
  // Throws KeyFormatError unless bytes holds 16/32/64 octets for the variant.
  MasterKey(Variant variant, std::span<const std::uint8_t> bytes);

  // Infers the variant from the length: 16 -> 128, 32 -> 256, 64 -> 512.
  static MasterKey from_bytes(std::span<const std::uint8_t> bytes);

  Variant variant() const noexcept { return variant_; }
  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

 private:
  Variant variant_;
  std::vector<std::uint8_t> bytes_;
};

// 8 octets for the 128/256-bit variants, 16 for the 512-bit variant. Length
// is checked against the key by schedule().
class InitVector {
 public:
  explicit InitVector(std::span<const std::uint8_t> bytes)
      : bytes_(bytes.begin(), bytes.end()) {}

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  std::size_t size() const noexcept { return bytes_.size(); }

  friend bool operator==(const InitVector&, const InitVector&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

std::size_t key_size(Variant v) noexcept;
std::size_t iv_size(Variant v) noexcept;

// Per-map control word. Layout, most significant bit first:
//   hpsn[8] | orbits[4] | samples[6] | settles[6] | seed[20] | offset[20]
struct SubKey {
  std::uint64_t raw = 0;
  std::uint8_t hpsn = 0;
  std::uint8_t orbits_code = 0;
  std::uint8_t samples_code = 0;
  std::uint8_t settles_code = 0;
  std::uint32_t seed_code = 0;
  std::uint32_t offset_code = 0;

  int orbits() const noexcept { return 20 + orbits_code; }
  int samples() const noexcept { return 8 + samples_code; }
  int settles() const noexcept { return 32 + settles_code; }

  // Packs the field codes (ignoring `raw`). Codes are masked to width.
  std::uint64_t encode() const noexcept;

  friend bool operator==(const SubKey&, const SubKey&) = default;
};

SubKey decode_subkey(std::uint64_t raw) noexcept;

using SubKeySet = std::vector<SubKey>;

// Halve key and IV, hash V_L||K_L and V_R||K_R (SHA-256, or SHA-512 for the
// 512-bit variant), interleave the digests bit by bit starting with the left
// one, and cut the result into 64-bit big-endian subkeys.
// Throws KeyFormatError if the IV length does not match the key's variant.
SubKeySet schedule(const MasterKey& key, const InitVector& iv);

// Bit-level interleave of equal-length octet strings, MSB first, `left` bit
// first. Output is twice as long.
std::vector<std::uint8_t> interleave_bits(std::span<const std::uint8_t> left,
                                          std::span<const std::uint8_t> right);

std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> deinterleave_bits(
    std::span<const std::uint8_t> mixed);

// Maps a 20-bit seed field into the map's range: u = (code + 1) / (2^20 + 2),
// then u (logistic) or 4u - 2 (quadratic). An exact fixed point is nudged.
// Quadratic seeds may lie outside [-beta, beta]; start_orbit folds them in.
double seed_real(const MapDescriptor& map, std::uint32_t seed_code) noexcept;

// (code + 1) / (2^20 + 2) / 32, in (0, 1/32).
double offset_real(std::uint32_t offset_code) noexcept;

}  // namespace mmohocc
