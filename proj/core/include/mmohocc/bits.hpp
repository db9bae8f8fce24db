#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace mmohocc {

// Packed bit stream, bit 0 first. Octet input is read most significant bit
// first, so bit 8k+j is bit (7 - j) of octet k.
class BitSequence {
 public:
  BitSequence() = default;

  static BitSequence from_bytes(std::span<const std::uint8_t> bytes);
  // Takes the first n_bits of bytes (n_bits <= 8 * bytes.size()).
  static BitSequence from_bytes(std::span<const std::uint8_t> bytes, std::size_t n_bits);
  // One element per bit; any nonzero value is a one.
  static BitSequence from_bits(std::span<const std::uint8_t> bits);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool operator[](std::size_t i) const noexcept {
    return (words_[i >> 6] >> (63 - (i & 63))) & 1u;
  }

  std::size_t count_ones() const noexcept;

  // 64 bits starting at `pos`, wrapping around the end; bit `pos` lands in
  // the most significant position.
  std::uint64_t window64(std::size_t pos) const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  void push_back(bool bit);

  BitSequence complement() const;
  // Cyclic left rotation: result[i] = (*this)[(i + k) mod N].
  BitSequence rotated(std::size_t k) const;
  BitSequence slice(std::size_t first, std::size_t count) const;

  // Packed octets, MSB first, final octet zero-padded.
  std::vector<std::uint8_t> to_bytes() const;

  friend bool operator==(const BitSequence&, const BitSequence&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace mmohocc
