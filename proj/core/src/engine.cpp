#include "mmohocc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mmohocc/hopping.hpp"

namespace mmohocc {

double start_orbit(const MapDescriptor& map, double seed, double offset,
                   int hop) noexcept {
  const double raw = seed + static_cast<double>(hop) * offset * kHoppingSkew;
  const double lo = map.domain_lo();
  const double width = map.domain_hi() - lo;
  const double t = (raw - lo) / width;
  const double frac = t - std::floor(t);
  return guard_point(map, lo + frac * width);
}

double start_orbit(const SubKey& subkey, const MapDescriptor& map, int hop) noexcept {
  return start_orbit(map, seed_real(map, subkey.seed_code),
                     offset_real(subkey.offset_code), hop);
}

HopCursor::HopCursor(std::vector<LaneShape> shape) : shape_(std::move(shape)) {
  if (shape_.empty()) throw std::invalid_argument("cursor needs at least one lane");
  for (const auto& s : shape_) {
    if (s.orbits < 1 || s.samples < 1) {
      throw std::invalid_argument("lane needs at least one orbit and one sample");
    }
  }
}

void HopCursor::advance() noexcept {
  if (++sample_ < shape_[map_].samples) return;
  finish_visit();
}

void HopCursor::finish_visit() noexcept {
  sample_ = 0;
  if (++hop_ < static_cast<std::size_t>(shape_[map_].orbits)) return;
  hop_ = 0;
  if (++map_ == shape_.size()) map_ = 0;
}

std::size_t HopCursor::pass_words() const noexcept {
  std::size_t n = 0;
  for (const auto& s : shape_) {
    n += static_cast<std::size_t>(s.orbits) * static_cast<std::size_t>(s.samples);
  }
  return n;
}

namespace {

std::vector<HopCursor::LaneShape> shape_of(const SubKeySet& subkeys) {
  std::vector<HopCursor::LaneShape> shape;
  shape.reserve(subkeys.size());
  for (const auto& k : subkeys) shape.push_back({k.orbits(), k.samples()});
  return shape;
}

}  // namespace

Engine::Engine(const MasterKey& key, const InitVector& iv)
    : Engine(default_bank(key.variant()), schedule(key, iv)) {}

Engine::Engine(const MapBank& bank, const SubKeySet& subkeys)
    : cursor_(shape_of(subkeys)) {
  if (bank.size() != subkeys.size()) {
    throw std::invalid_argument("map bank and subkey set sizes differ");
  }
  lanes_.reserve(bank.size());
  for (std::size_t i = 0; i < bank.size(); ++i) {
    const SubKey& k = subkeys[i];
    std::vector<int> order = pattern(k.hpsn, k.orbits()).order;
    for (int& o : order) --o;
    const auto n = static_cast<std::size_t>(k.orbits());
    lanes_.push_back(Lane{bank[i], k, std::move(order), std::vector<double>(n, 0.0),
                          std::vector<std::uint8_t>(n, 0),
                          seed_real(bank[i], k.seed_code), offset_real(k.offset_code)});
  }
}

double& Engine::current_point() {
  Lane& lane = lanes_[cursor_.map_index()];
  const auto orbit = static_cast<std::size_t>(lane.order[cursor_.hop_position()]);
  double& x = lane.points[orbit];
  if (!lane.visited[orbit]) {
    x = start_orbit(lane.map, lane.seed, lane.offset, static_cast<int>(orbit) + 1);
    for (int s = 0; s < lane.subkey.settles(); ++s) x = guarded_step(lane.map, x);
    lane.visited[orbit] = 1;
  }
  return x;
}

KeystreamWord Engine::next_word() {
  carry_.reset();
  double& x = current_point();
  x = guarded_step(lanes_[cursor_.map_index()].map, x);
  cursor_.advance();
  return extract_word(x);
}

void Engine::generate(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  const std::size_t n = out.size();
  if (carry_ && n > 0) {
    out[i++] = *carry_;
    carry_.reset();
  }
  while (i < n) {
    const MapDescriptor map = lanes_[cursor_.map_index()].map;
    double& point = current_point();
    double x = point;
    int k = cursor_.sample_index();
    const int samples = cursor_.lane().samples;
    for (; k < samples && i + 1 < n; ++k, i += 2) {
      x = guarded_step(map, x);
      const KeystreamWord w = extract_word(x);
      out[i] = w.p;
      out[i + 1] = w.q;
    }
    if (k < samples && i < n) {
      x = guarded_step(map, x);
      const KeystreamWord w = extract_word(x);
      out[i++] = w.p;
      carry_ = w.q;
      ++k;
    }
    point = x;
    if (k == samples) {
      cursor_.finish_visit();
    } else {
      cursor_.set_sample(k);
    }
  }
}

void Engine::apply(std::span<std::uint8_t> data) {
  constexpr std::size_t kChunk = 16 * 1024;
  std::uint8_t buf[kChunk];
  for (std::size_t off = 0; off < data.size(); off += kChunk) {
    const std::size_t len = std::min(kChunk, data.size() - off);
    generate(std::span<std::uint8_t>(buf, len));
    for (std::size_t j = 0; j < len; ++j) data[off + j] ^= buf[j];
  }
}

std::optional<double> Engine::orbit_point(std::size_t lane, int orbit) const {
  const Lane& l = lanes_.at(lane);
  const auto idx = static_cast<std::size_t>(orbit - 1);
  if (idx >= l.points.size()) throw std::out_of_range("orbit index out of range");
  if (!l.visited[idx]) return std::nullopt;
  return l.points[idx];
}

std::vector<std::uint8_t> keystream(const MasterKey& key, const InitVector& iv,
                                    std::size_t n_bytes) {
  std::vector<std::uint8_t> out(n_bytes);
  Engine engine(key, iv);
  engine.generate(out);
  return out;
}

std::vector<std::uint8_t> encrypt(const MasterKey& key, const InitVector& iv,
                                  std::span<const std::uint8_t> plaintext) {
  std::vector<std::uint8_t> out(plaintext.begin(), plaintext.end());
  Engine engine(key, iv);
  engine.apply(out);
  return out;
}

std::vector<std::uint8_t> decrypt(const MasterKey& key, const InitVector& iv,
                                  std::span<const std::uint8_t> ciphertext) {
  return encrypt(key, iv, ciphertext);
}

}  // namespace mmohocc
