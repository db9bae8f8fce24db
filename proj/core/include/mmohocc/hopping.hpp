#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mmohocc {

inline constexpr int kMinPatternOrbits = 2;
inline constexpr int kMaxPatternOrbits = 64;

// Orbit visit order for one map; 1-based orbit indices forming a permutation
// of {1..n}.
struct HoppingPattern {
  std::vector<int> order;

  std::size_t size() const noexcept { return order.size(); }
  friend bool operator==(const HoppingPattern&, const HoppingPattern&) = default;
};

// (1,2), (3,4), ... with a final (n-2, n-1, n) triple when n is odd.
std::vector<std::vector<int>> block_structure(int n_orbits);

// Table lookup rule. With B blocks, hpsn < min(B!, 256) selects the
// lexicographic rank-hpsn block permutation with blocks in ascending internal
// order. Larger hpsn use rank (hpsn - B!) mod B! with pairs reversed and the
// triple emitted as (first, third, second).
// Throws std::out_of_range unless 2 <= n_orbits <= 64.
HoppingPattern pattern(std::uint8_t hpsn, int n_orbits);

// All 256 patterns for n_orbits, indexed by hpsn.
std::vector<HoppingPattern> table(int n_orbits);

// One line per hpsn, orbit indices joined by commas, no header.
std::string table_csv(int n_orbits);

}  // namespace mmohocc
