#include "mmohocc/period.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mmohocc/engine.hpp"
#include "mmohocc/filter.hpp"
#include "mmohocc/hopping.hpp"

namespace mmohocc {

std::uint64_t state_space_bits(std::size_t maps, int orbits_per_map) noexcept {
  return static_cast<std::uint64_t>(maps) * static_cast<std::uint64_t>(orbits_per_map) * 32;
}

std::uint64_t state_space_bits(const SubKeySet& subkeys) noexcept {
  std::uint64_t bits = 0;
  for (const auto& k : subkeys) bits += static_cast<std::uint64_t>(k.orbits()) * 32;
  return bits;
}

std::uint64_t state_space_bits(Variant variant, const SubKeySet& subkeys) {
  if (subkeys.size() != map_count(variant)) {
    throw std::invalid_argument("subkey count does not match the variant");
  }
  return state_space_bits(subkeys);
}

QuantizedMap::QuantizedMap(const MapDescriptor& map, unsigned precision_bits)
    : map_(map) {
  if (precision_bits < 4 || precision_bits > 24) {
    throw std::invalid_argument("precision must be between 4 and 24 bits");
  }
  size_ = 1u << precision_bits;
  step_ = (map.domain_hi() - map.domain_lo()) / static_cast<double>(size_);
}

std::uint32_t QuantizedMap::quantize(double x) const noexcept {
  const double lo = map_.domain_lo();
  const double scaled =
      (x - lo) / (map_.domain_hi() - lo) * static_cast<double>(size_);
  if (!(scaled > 0.0)) return 0;
  if (scaled >= static_cast<double>(size_)) return size_;
  return static_cast<std::uint32_t>(std::nearbyint(scaled));
}

double QuantizedMap::value(std::uint32_t k) const noexcept {
  return map_.domain_lo() + static_cast<double>(k) * step_;
}

namespace {

// Brent's cycle detection over any copyable, equality-comparable state.
// Returns false if more than `limit` steps would be needed.
template <typename State, typename Step>
bool brent(const State& start, Step step, std::uint64_t limit, CycleInfo& out) {
  std::uint64_t power = 1;
  std::uint64_t lam = 1;
  std::uint64_t steps = 1;
  State tortoise = start;
  State hare = start;
  step(hare);
  while (!(tortoise == hare)) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    step(hare);
    ++lam;
    if (++steps > limit) return false;
  }
  tortoise = start;
  hare = start;
  for (std::uint64_t i = 0; i < lam; ++i) step(hare);
  std::uint64_t mu = 0;
  while (!(tortoise == hare)) {
    step(tortoise);
    step(hare);
    ++mu;
  }
  out = CycleInfo{mu, lam};
  return true;
}

}  // namespace

CycleInfo cycle_length(const MapDescriptor& map, double x0, unsigned precision_bits) {
  const QuantizedMap q(map, precision_bits);
  CycleInfo info;
  brent(q.quantize(x0), [&](std::uint32_t& k) { k = q.next(k); },
        std::numeric_limits<std::uint64_t>::max(), info);
  return info;
}

std::uint64_t longest_cycle(const MapDescriptor& map, unsigned precision_bits) {
  const QuantizedMap q(map, precision_bits);
  std::uint64_t best = 0;
  for (std::uint32_t k = 0; k < q.states(); ++k) {
    CycleInfo info;
    brent(k, [&](std::uint32_t& s) { s = q.next(s); },
          std::numeric_limits<std::uint64_t>::max(), info);
    best = std::max(best, info.cycle);
  }
  return best;
}

namespace {

struct QuantizedLane {
  QuantizedMap map;
  std::vector<int> order;  // 0-based
  std::vector<std::uint32_t> start;  // per orbit, already settled
};

struct QuantizedState {
  std::vector<std::vector<std::uint32_t>> points;
  std::vector<std::vector<std::uint8_t>> visited;
  HopCursor cursor;

  friend bool operator==(const QuantizedState&, const QuantizedState&) = default;
};

class QuantizedEngine {
 public:
  QuantizedEngine(std::span<const MapDescriptor> maps, const SubKeySet& subkeys,
                  unsigned bits) {
    if (maps.empty() || maps.size() > subkeys.size()) {
      throw std::invalid_argument("engine cycle needs 1..#subkeys maps");
    }
    std::vector<HopCursor::LaneShape> shape;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const SubKey& k = subkeys[i];
      QuantizedLane lane{QuantizedMap(maps[i], bits), pattern(k.hpsn, k.orbits()).order, {}};
      for (int& o : lane.order) --o;
      const double seed = seed_real(maps[i], k.seed_code);
      const double offset = offset_real(k.offset_code);
      for (int o = 1; o <= k.orbits(); ++o) {
        std::uint32_t s = lane.map.quantize(start_orbit(maps[i], seed, offset, o));
        for (int j = 0; j < k.settles(); ++j) s = lane.map.next(s);
        lane.start.push_back(s);
      }
      lanes_.push_back(std::move(lane));
      shape.push_back({k.orbits(), k.samples()});
    }
    initial_ = QuantizedState{{}, {}, HopCursor(shape)};
    for (const auto& lane : lanes_) {
      initial_.points.emplace_back(lane.start.size(), 0);
      initial_.visited.emplace_back(lane.start.size(), 0);
    }
  }

  const QuantizedState& initial() const noexcept { return initial_; }

  std::uint16_t step(QuantizedState& st) const {
    const std::size_t m = st.cursor.map_index();
    const QuantizedLane& lane = lanes_[m];
    const auto orbit = static_cast<std::size_t>(lane.order[st.cursor.hop_position()]);
    std::uint32_t& k = st.points[m][orbit];
    if (!st.visited[m][orbit]) {
      k = lane.start[orbit];
      st.visited[m][orbit] = 1;
    }
    k = lane.map.next(k);
    st.cursor.advance();
    return extract_word(lane.map.value(k)).packed();
  }

 private:
  std::vector<QuantizedLane> lanes_;
  QuantizedState initial_{{}, {}, HopCursor({{1, 1}})};
};

}  // namespace

EngineCycle engine_cycle(std::span<const MapDescriptor> maps, const SubKeySet& subkeys,
                         unsigned precision_bits, std::uint64_t max_words) {
  const QuantizedEngine engine(maps, subkeys, precision_bits);
  EngineCycle result;
  result.complete = brent(engine.initial(), [&](QuantizedState& s) { engine.step(s); },
                          max_words, result.state);
  if (!result.complete) return result;

  QuantizedState st = engine.initial();
  for (std::uint64_t i = 0; i < result.state.tail; ++i) engine.step(st);
  const std::uint64_t lam = result.state.cycle;
  std::vector<std::uint16_t> words(lam);
  for (auto& w : words) w = engine.step(st);
  for (std::uint64_t d = 1; d <= lam; ++d) {
    if (lam % d != 0) continue;
    bool periodic = true;
    for (std::uint64_t t = 0; t < lam && periodic; ++t) {
      periodic = words[t] == words[(t + d) % lam];
    }
    if (periodic) {
      result.output_cycle = d;
      break;
    }
  }
  return result;
}

}  // namespace mmohocc
