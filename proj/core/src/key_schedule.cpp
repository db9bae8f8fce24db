#include "mmohocc/key_schedule.hpp"

#include "mmohocc/errors.hpp"
#include "mmohocc/hash.hpp"

namespace mmohocc {

std::size_t key_size(Variant v) noexcept {
  switch (v) {
    case Variant::k128: return 16;
    case Variant::k256: return 32;
    case Variant::k512: return 64;
  }
  return 0;
}

std::size_t iv_size(Variant v) noexcept {
  return v == Variant::k512 ? 16 : 8;
}

MasterKey::MasterKey(Variant variant, std::span<const std::uint8_t> bytes)
    : variant_(variant), bytes_(bytes.begin(), bytes.end()) {
  if (bytes_.size() != key_size(variant)) {
    throw KeyFormatError("key length " + std::to_string(bytes_.size()) +
                         " does not match the " + std::string(to_string(variant)) +
                         "-bit variant");
  }
}

MasterKey MasterKey::from_bytes(std::span<const std::uint8_t> bytes) {
  switch (bytes.size()) {
    case 16: return MasterKey(Variant::k128, bytes);
    case 32: return MasterKey(Variant::k256, bytes);
    case 64: return MasterKey(Variant::k512, bytes);
  }
  throw KeyFormatError("key must be 16, 32 or 64 octets, got " +
                       std::to_string(bytes.size()));
}

std::uint64_t SubKey::encode() const noexcept {
  return std::uint64_t{hpsn} << 56 | std::uint64_t{orbits_code & 0xFu} << 52 |
         std::uint64_t{samples_code & 0x3Fu} << 46 |
         std::uint64_t{settles_code & 0x3Fu} << 40 |
         std::uint64_t{seed_code & 0xFFFFFu} << 20 | (offset_code & 0xFFFFFu);
}

SubKey decode_subkey(std::uint64_t raw) noexcept {
  SubKey k;
  k.raw = raw;
  k.hpsn = static_cast<std::uint8_t>(raw >> 56);
  k.orbits_code = static_cast<std::uint8_t>((raw >> 52) & 0xF);
  k.samples_code = static_cast<std::uint8_t>((raw >> 46) & 0x3F);
  k.settles_code = static_cast<std::uint8_t>((raw >> 40) & 0x3F);
  k.seed_code = static_cast<std::uint32_t>((raw >> 20) & 0xFFFFF);
  k.offset_code = static_cast<std::uint32_t>(raw & 0xFFFFF);
  return k;
}

std::vector<std::uint8_t> interleave_bits(std::span<const std::uint8_t> left,
                                          std::span<const std::uint8_t> right) {
  if (left.size() != right.size()) {
    throw LengthMismatch("interleave needs equal-length inputs");
  }
  std::vector<std::uint8_t> out(left.size() * 2, 0);
  for (std::size_t i = 0; i < left.size() * 8; ++i) {
    const unsigned l = (left[i / 8] >> (7 - i % 8)) & 1u;
    const unsigned r = (right[i / 8] >> (7 - i % 8)) & 1u;
    const std::size_t pos = 2 * i;
    out[pos / 8] |= static_cast<std::uint8_t>(l << (7 - pos % 8));
    out[(pos + 1) / 8] |= static_cast<std::uint8_t>(r << (7 - (pos + 1) % 8));
  }
  return out;
}

std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> deinterleave_bits(
    std::span<const std::uint8_t> mixed) {
  if (mixed.size() % 2 != 0) {
    throw LengthMismatch("interleaved string must have even octet length");
  }
  std::vector<std::uint8_t> left(mixed.size() / 2, 0);
  std::vector<std::uint8_t> right(mixed.size() / 2, 0);
  for (std::size_t pos = 0; pos < mixed.size() * 8; ++pos) {
    const unsigned bit = (mixed[pos / 8] >> (7 - pos % 8)) & 1u;
    const std::size_t i = pos / 2;
    auto& dst = pos % 2 == 0 ? left : right;
    dst[i / 8] |= static_cast<std::uint8_t>(bit << (7 - i % 8));
  }
  return {std::move(left), std::move(right)};
}

SubKeySet schedule(const MasterKey& key, const InitVector& iv) {
  const Variant v = key.variant();
  if (iv.size() != iv_size(v)) {
    throw KeyFormatError("IV length " + std::to_string(iv.size()) +
                         " does not match the " + std::string(to_string(v)) +
                         "-bit variant (expected " + std::to_string(iv_size(v)) + ")");
  }
  const auto k = key.bytes();
  const auto n = iv.bytes();
  const std::size_t kh = k.size() / 2;
  const std::size_t nh = n.size() / 2;

  std::vector<std::uint8_t> left(n.begin(), n.begin() + nh);
  left.insert(left.end(), k.begin(), k.begin() + kh);
  std::vector<std::uint8_t> right(n.begin() + nh, n.end());
  right.insert(right.end(), k.begin() + kh, k.end());

  std::vector<std::uint8_t> mixed;
  if (v == Variant::k512) {
    mixed = interleave_bits(sha512(left), sha512(right));
  } else {
    mixed = interleave_bits(sha256(left), sha256(right));
  }

  SubKeySet out;
  out.reserve(mixed.size() / 8);
  for (std::size_t i = 0; i < mixed.size(); i += 8) {
    std::uint64_t raw = 0;
    for (std::size_t j = 0; j < 8; ++j) raw = raw << 8 | mixed[i + j];
    out.push_back(decode_subkey(raw));
  }
  return out;
}

double seed_real(const MapDescriptor& map, std::uint32_t seed_code) noexcept {
  const double u = static_cast<double>((seed_code & 0xFFFFFu) + 1) /
                   static_cast<double>((1u << 20) + 2);
  const double x = map.kind() == MapKind::kLogistic ? u : 4.0 * u - 2.0;
  return map.apply(x) == x ? nudge(map, x) : x;
}

double offset_real(std::uint32_t offset_code) noexcept {
  return static_cast<double>((offset_code & 0xFFFFFu) + 1) /
         static_cast<double>((1u << 20) + 2) / 32.0;
}

}  // namespace mmohocc
