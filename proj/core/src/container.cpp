#include "mmohocc/container.hpp"

#include <algorithm>

#include "mmohocc/engine.hpp"
#include "mmohocc/errors.hpp"

namespace mmohocc {

std::uint8_t variant_code(Variant v) noexcept {
  return static_cast<std::uint8_t>(v);
}

ContainerHeader parse_header(std::span<const std::uint8_t> c) {
  constexpr std::size_t kFixed = kContainerMagic.size() + 2;
  if (c.size() < kFixed) throw FormatError("container is truncated");
  if (!std::equal(kContainerMagic.begin(), kContainerMagic.end(), c.begin())) {
    throw FormatError("missing MMOH magic");
  }
  if (c[4] != kContainerVersion) {
    throw FormatError("unsupported container version " + std::to_string(c[4]));
  }
  if (c[5] > 2) throw FormatError("unknown variant code " + std::to_string(c[5]));
  const auto variant = static_cast<Variant>(c[5]);
  const std::size_t n = iv_size(variant);
  if (c.size() < kFixed + n) throw FormatError("container IV is truncated");
  return ContainerHeader{variant, InitVector(c.subspan(kFixed, n)), kFixed + n};
}

std::vector<std::uint8_t> seal(const MasterKey& key, const InitVector& iv,
                               std::span<const std::uint8_t> plaintext) {
  std::vector<std::uint8_t> out(kContainerMagic.begin(), kContainerMagic.end());
  out.push_back(kContainerVersion);
  out.push_back(variant_code(key.variant()));
  out.insert(out.end(), iv.bytes().begin(), iv.bytes().end());
  const std::size_t header = out.size();
  out.insert(out.end(), plaintext.begin(), plaintext.end());
  // Validates the IV length before anything is written out.
  Engine engine(key, iv);
  engine.apply(std::span<std::uint8_t>(out).subspan(header));
  return out;
}

std::vector<std::uint8_t> open(const MasterKey& key,
                               std::span<const std::uint8_t> container) {
  const ContainerHeader h = parse_header(container);
  if (h.variant != key.variant()) {
    throw KeyFormatError("container was written for the " +
                         std::string(to_string(h.variant)) + "-bit variant");
  }
  return decrypt(key, h.iv, container.subspan(h.size));
}

}  // namespace mmohocc
