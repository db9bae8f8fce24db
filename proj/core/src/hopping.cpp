#include "mmohocc/hopping.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmohocc {

namespace {

void check_orbits(int n) {
  if (n < kMinPatternOrbits || n > kMaxPatternOrbits) {
    throw std::out_of_range("hopping patterns need 2..64 orbits, got " +
                            std::to_string(n));
  }
}

// k! saturated at 257; ranks never exceed 255.
std::uint32_t capped_factorial(int k) {
  std::uint32_t f = 1;
  for (int i = 2; i <= k && f <= 256; ++i) f *= static_cast<std::uint32_t>(i);
  return f > 256 ? 257 : f;
}

// Lexicographic unranking of a permutation of 0..n-1.
std::vector<int> unrank(std::uint32_t rank, int n) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::vector<int> out;
  out.reserve(pool.size());
  for (int remaining = n; remaining > 0; --remaining) {
    const std::uint32_t f = capped_factorial(remaining - 1);
    const std::uint32_t digit = rank / f;
    rank %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + digit);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> block_structure(int n_orbits) {
  check_orbits(n_orbits);
  std::vector<std::vector<int>> blocks;
  const int pairs_end = n_orbits % 2 == 0 ? n_orbits : n_orbits - 3;
  for (int i = 1; i < pairs_end; i += 2) blocks.push_back({i, i + 1});
  if (n_orbits % 2 != 0) blocks.push_back({n_orbits - 2, n_orbits - 1, n_orbits});
  return blocks;
}

HoppingPattern pattern(std::uint8_t hpsn, int n_orbits) {
  const auto blocks = block_structure(n_orbits);
  const int nblocks = static_cast<int>(blocks.size());
  const std::uint32_t total = capped_factorial(nblocks);

  const bool swapped = hpsn >= std::min<std::uint32_t>(total, 256);
  const std::uint32_t rank = swapped ? (hpsn - total) % total : hpsn;

  HoppingPattern p;
  p.order.reserve(static_cast<std::size_t>(n_orbits));
  for (int b : unrank(rank, nblocks)) {
    const auto& block = blocks[static_cast<std::size_t>(b)];
    if (!swapped) {
      p.order.insert(p.order.end(), block.begin(), block.end());
    } else if (block.size() == 2) {
      p.order.insert(p.order.end(), {block[1], block[0]});
    } else {
      p.order.insert(p.order.end(), {block[0], block[2], block[1]});
    }
  }
  return p;
}

std::vector<HoppingPattern> table(int n_orbits) {
  check_orbits(n_orbits);
  std::vector<HoppingPattern> rows;
  rows.reserve(256);
  for (int h = 0; h < 256; ++h) rows.push_back(pattern(static_cast<std::uint8_t>(h), n_orbits));
  return rows;
}

std::string table_csv(int n_orbits) {
  std::string out;
  for (const auto& row : table(n_orbits)) {
    for (std::size_t i = 0; i < row.order.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(row.order[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace mmohocc
