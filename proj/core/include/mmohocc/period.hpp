#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mmohocc/chaos.hpp"
#include "mmohocc/key_schedule.hpp"

namespace mmohocc {

// Sum over maps of (#orbits * 32). The same number is the base-2 exponent of
// the nominal period estimate.
std::uint64_t state_space_bits(std::size_t maps, int orbits_per_map) noexcept;
std::uint64_t state_space_bits(const SubKeySet& subkeys) noexcept;
// Throws std::invalid_argument if the subkey count does not fit the variant.
std::uint64_t state_space_bits(Variant variant, const SubKeySet& subkeys);

struct CycleInfo {
  std::uint64_t tail = 0;   // steps before the cycle is entered
  std::uint64_t cycle = 0;  // cycle length

  friend bool operator==(const CycleInfo&, const CycleInfo&) = default;
};

// Map iterated on a fixed-point grid: state k in [0, 2^bits] stands for
// lo + k * (hi - lo) / 2^bits, and every image is rounded (half-even) back to
// the grid. Precision must lie in [4, 24] (std::invalid_argument otherwise).
class QuantizedMap {
 public:
  QuantizedMap(const MapDescriptor& map, unsigned precision_bits);

  std::uint32_t states() const noexcept { return size_ + 1; }
  std::uint32_t quantize(double x) const noexcept;
  double value(std::uint32_t k) const noexcept;
  std::uint32_t next(std::uint32_t k) const noexcept { return quantize(map_.apply(value(k))); }
  const MapDescriptor& map() const noexcept { return map_; }

 private:
  MapDescriptor map_;
  std::uint32_t size_;
  double step_;
};

// Pre-period and cycle length of the quantized orbit from x0 (Brent's
// algorithm). Terminates within 2^bits + 1 + tail steps.
CycleInfo cycle_length(const MapDescriptor& map, double x0, unsigned precision_bits);

// Longest cycle reachable from any grid state.
std::uint64_t longest_cycle(const MapDescriptor& map, unsigned precision_bits);

struct EngineCycle {
  bool complete = false;      // false when max_words ran out first
  CycleInfo state;            // of the whole engine state, in words
  std::uint64_t output_cycle = 0;  // minimal period of the word stream
};

// Runs the full orbit-hopping engine (start_orbit seeding, settles, hopping
// patterns, sample counts from the subkeys) with every orbit point held on
// the quantized grid, and detects the cycle of the combined state. maps[i] is
// driven by subkeys[i]; fewer lanes than a full bank are allowed.
// output_cycle divides state.cycle and is computed when the cycle fits in
// max_words.
EngineCycle engine_cycle(std::span<const MapDescriptor> maps, const SubKeySet& subkeys,
                         unsigned precision_bits, std::uint64_t max_words);

}  // namespace mmohocc
