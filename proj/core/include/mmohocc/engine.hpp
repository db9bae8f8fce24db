#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mmohocc/chaos.hpp"
#include "mmohocc/filter.hpp"
#include "mmohocc/key_schedule.hpp"

namespace mmohocc {

// seed + hop * offset * kHoppingSkew, folded into the open map domain by
// taking the fractional part of (raw - lo) / (hi - lo), then guard_point.
double start_orbit(const MapDescriptor& map, double seed, double offset,
                   int hop) noexcept;
double start_orbit(const SubKey& subkey, const MapDescriptor& map, int hop) noexcept;

// Position in the map -> hopping-pattern entry -> sample loop nest. After
// the last sample of the last pattern entry of the last map it wraps to the
// first map.
class HopCursor {
 public:
  struct LaneShape {
    int orbits;
    int samples;

    friend bool operator==(const LaneShape&, const LaneShape&) = default;
  };

  explicit HopCursor(std::vector<LaneShape> shape);

  std::size_t map_index() const noexcept { return map_; }
  std::size_t hop_position() const noexcept { return hop_; }
  int sample_index() const noexcept { return sample_; }

  void advance() noexcept;
  // Jumps past the remaining samples of the current orbit visit.
  void finish_visit() noexcept;
  // Sets the sample index inside the current visit; k must be < samples.
  void set_sample(int k) noexcept { sample_ = k; }

  const LaneShape& lane() const noexcept { return shape_[map_]; }
  std::size_t pass_words() const noexcept;

  // Compares positions only; callers compare cursors over the same shape.
  friend bool operator==(const HopCursor& a, const HopCursor& b) noexcept {
    return a.map_ == b.map_ && a.hop_ == b.hop_ && a.sample_ == b.sample_;
  }

 private:
  std::vector<LaneShape> shape_;
  std::size_t map_ = 0;
  std::size_t hop_ = 0;
  int sample_ = 0;
};

// Keystream generator state for one stream. Single writer; copyable.
class Engine {
 public:
  Engine(const MasterKey& key, const InitVector& iv);
  // Throws std::invalid_argument if the bank and subkey counts differ.
  Engine(const MapBank& bank, const SubKeySet& subkeys);

  // One map iteration and one filtered word. Drops any octet left over by an
  // odd-length generate().
  KeystreamWord next_word();

  // Keystream octets, words serialized p then q. An odd length keeps the
  // trailing q octet for the next call.
  void generate(std::span<std::uint8_t> out);

  // XORs the keystream into data in place.
  void apply(std::span<std::uint8_t> data);

  std::size_t map_count() const noexcept { return lanes_.size(); }
  // Words per full pass: sum over maps of orbits * samples.
  std::size_t pass_words() const noexcept { return cursor_.pass_words(); }
  const HopCursor& cursor() const noexcept { return cursor_; }

  const MapDescriptor& map(std::size_t lane) const { return lanes_[lane].map; }
  const SubKey& subkey(std::size_t lane) const { return lanes_[lane].subkey; }
  const std::vector<int>& hopping_order(std::size_t lane) const {
    return lanes_[lane].order;
  }
  // Current point of a 1-based orbit, or nullopt before its first visit.
  std::optional<double> orbit_point(std::size_t lane, int orbit) const;

 private:
  struct Lane {
    MapDescriptor map;
    SubKey subkey;
    std::vector<int> order;  // 0-based orbit indices in visit order
    std::vector<double> points;
    std::vector<std::uint8_t> visited;
    double seed;
    double offset;
  };

  double& current_point();

  std::vector<Lane> lanes_;
  HopCursor cursor_;
  std::optional<std::uint8_t> carry_;
};

std::vector<std::uint8_t> keystream(const MasterKey& key, const InitVector& iv,
                                    std::size_t n_bytes);

// output[i] = input[i] ^ keystream[i]. decrypt is the same operation.
std::vector<std::uint8_t> encrypt(const MasterKey& key, const InitVector& iv,
                                  std::span<const std::uint8_t> plaintext);
std::vector<std::uint8_t> decrypt(const MasterKey& key, const InitVector& iv,
                                  std::span<const std::uint8_t> ciphertext);

}  // namespace mmohocc
