#include "mmohocc/bits.hpp"

#include <stdexcept>

namespace mmohocc {

BitSequence BitSequence::from_bytes(std::span<const std::uint8_t> bytes) {
  return from_bytes(bytes, bytes.size() * 8);
}

BitSequence BitSequence::from_bytes(std::span<const std::uint8_t> bytes,
                                    std::size_t n_bits) {
  if (n_bits > bytes.size() * 8) {
    throw std::out_of_range("requested more bits than the octets hold");
  }
  BitSequence s;
  s.size_ = n_bits;
  s.words_.assign((n_bits + 63) / 64, 0);
  const std::size_t n_bytes = (n_bits + 7) / 8;
  for (std::size_t i = 0; i < n_bytes; ++i) {
    s.words_[i / 8] |= std::uint64_t{bytes[i]} << (56 - 8 * (i % 8));
  }
  if (n_bits % 64 != 0) {
    s.words_.back() &= ~std::uint64_t{0} << (64 - n_bits % 64);
  }
  return s;
}

BitSequence BitSequence::from_bits(std::span<const std::uint8_t> bits) {
  BitSequence s;
  for (std::uint8_t b : bits) s.push_back(b != 0);
  return s;
}

std::size_t BitSequence::count_ones() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::uint64_t BitSequence::window64(std::size_t pos) const noexcept {
  pos %= size_;
  const std::size_t word = pos >> 6;
  const unsigned shift = pos & 63;
  if (pos + 64 <= size_) {
    if (shift == 0) return words_[word];
    return words_[word] << shift | words_[word + 1] >> (64 - shift);
  }
  std::uint64_t out = 0;
  for (unsigned k = 0; k < 64; ++k) {
    out = out << 1 | static_cast<std::uint64_t>((*this)[(pos + k) % size_]);
  }
  return out;
}

void BitSequence::push_back(bool bit) {
  if (size_ % 64 == 0) words_.push_back(0);
  if (bit) words_.back() |= std::uint64_t{1} << (63 - size_ % 64);
  ++size_;
}

BitSequence BitSequence::complement() const {
  BitSequence s = *this;
  for (auto& w : s.words_) w = ~w;
  if (size_ % 64 != 0) s.words_.back() &= ~std::uint64_t{0} << (64 - size_ % 64);
  return s;
}

BitSequence BitSequence::rotated(std::size_t k) const {
  BitSequence s;
  for (std::size_t i = 0; i < size_; ++i) s.push_back((*this)[(i + k) % size_]);
  return s;
}

BitSequence BitSequence::slice(std::size_t first, std::size_t count) const {
  if (first + count > size_) throw std::out_of_range("slice exceeds the sequence");
  BitSequence s;
  for (std::size_t i = 0; i < count; ++i) s.push_back((*this)[first + i]);
  return s;
}

std::vector<std::uint8_t> BitSequence::to_bytes() const {
  std::vector<std::uint8_t> out((size_ + 7) / 8);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(words_[i / 8] >> (56 - 8 * (i % 8)));
  }
  return out;
}

}  // namespace mmohocc
