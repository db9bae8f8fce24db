#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace mmohocc {

// Reference RC4 (KSA + PRGA). Used only as the throughput baseline.
class Rc4 {
 public:
  // Throws KeyFormatError unless the key holds 5..32 octets.
  explicit Rc4(std::span<const std::uint8_t> key);

  std::uint8_t next() noexcept {
    i_ = static_cast<std::uint8_t>(i_ + 1);
    j_ = static_cast<std::uint8_t>(j_ + s_[i_]);
    std::swap(s_[i_], s_[j_]);
    return s_[static_cast<std::uint8_t>(s_[i_] + s_[j_])];
  }

  void generate(std::span<std::uint8_t> out) noexcept;
  void apply(std::span<std::uint8_t> data) noexcept;

  const std::array<std::uint8_t, 256>& permutation() const noexcept { return s_; }

 private:
  std::array<std::uint8_t, 256> s_{};
  std::uint8_t i_ = 0;
  std::uint8_t j_ = 0;
};

std::vector<std::uint8_t> rc4_keystream(std::span<const std::uint8_t> key, std::size_t n);

}  // namespace mmohocc
