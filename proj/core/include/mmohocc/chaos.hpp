#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mmohocc {

enum class MapKind : std::uint8_t { kLogistic, kQuadratic };

enum class Variant : std::uint8_t { k128, k256, k512 };

std::size_t map_count(Variant v) noexcept;
std::string_view to_string(Variant v) noexcept;

// One chaotic map of the bank: logistic x -> r x (1 - x) on [0, 1], or
// quadratic x -> x^2 + c on [-beta, beta] where beta = (1 + sqrt(1 - 4c)) / 2
// is the repelling fixed point bounding the invariant interval.
class MapDescriptor {
 public:
  // Throws std::invalid_argument unless 3.57 < r <= 4.
  static MapDescriptor logistic(double r);
  // Throws std::invalid_argument unless -2 <= c <= -1.9.
  static MapDescriptor quadratic(double c);
  // Any member of the family with a bounded invariant interval
  // (0 < r <= 4, or -2 <= c <= 1/4). For probing windows and cycles outside
  // the cipher's parameter ranges; never used for a bank.
  static MapDescriptor unrestricted(MapKind kind, double param);

  MapKind kind() const noexcept { return kind_; }
  double param() const noexcept { return param_; }
  double domain_lo() const noexcept { return lo_; }
  double domain_hi() const noexcept { return hi_; }

  // Raw map arithmetic, no domain checks. Logistic is evaluated as
  // (r * x) * (1 - x); every operation rounds to binary64.
  double apply(double x) const noexcept {
    return kind_ == MapKind::kLogistic ? (param_ * x) * (1.0 - x)
                                       : x * x + param_;
  }

  bool contains(double x) const noexcept { return x >= lo_ && x <= hi_; }
  bool contains_open(double x) const noexcept { return x > lo_ && x < hi_; }

  friend bool operator==(const MapDescriptor&, const MapDescriptor&) = default;

 private:
  MapDescriptor(MapKind kind, double param, double lo, double hi)
      : kind_(kind), param_(param), lo_(lo), hi_(hi) {}

  MapKind kind_;
  double param_;
  double lo_;
  double hi_;
};

// Ordered map set used by one cipher variant: 8 maps for 128/256-bit keys,
// 16 for 512-bit keys, always mixing both kinds.
class MapBank {
 public:
  // Throws std::invalid_argument if the size or kind mixture is wrong.
  explicit MapBank(std::vector<MapDescriptor> maps);

  std::size_t size() const noexcept { return maps_.size(); }
  const MapDescriptor& operator[](std::size_t i) const { return maps_[i]; }
  auto begin() const noexcept { return maps_.begin(); }
  auto end() const noexcept { return maps_.end(); }

 private:
  std::vector<MapDescriptor> maps_;
};

// One checked iteration. Accepts the closed domain; throws DomainError if x
// or the result falls outside it.
double iterate(const MapDescriptor& map, double x);

// n checked iterations. DomainError::step() names the failing iteration.
double iterate_n(const MapDescriptor& map, double x, std::uint64_t n);

const MapBank& default_bank(Variant v);

// Runs a 1024-step transient, then `horizon` steps, and reports false when
// the trailing orbit repeats exactly with some period <= 64.
// Throws std::invalid_argument if horizon < 4096.
bool is_window_free(const MapDescriptor& map, double probe_seed,
                    std::uint64_t horizon = 4096);

inline constexpr double kDegenerateNudge = 0x1p-40;

// Degenerate-orbit guard. Moves y off an endpoint (or back inside from
// outside the domain) and off exact fixed points by 2^-40, staying strictly
// inside the open domain. NaN maps to the domain midpoint.
double nudge(const MapDescriptor& map, double y) noexcept;

// Applies nudge() when x is not strictly interior or is an exact binary64
// fixed point of the map.
double guard_point(const MapDescriptor& map, double x) noexcept;

// One engine step: iterate, then nudge if the result left the open domain or
// did not move.
inline double guarded_step(const MapDescriptor& map, double x) noexcept {
  const double y = map.apply(x);
  if (!map.contains_open(y) || y == x) return nudge(map, y);
  return y;
}

// "logistic 0x400feb851eb851ec" per line, param as its binary64 bit pattern.
std::string bank_manifest(const MapBank& bank);

}  // namespace mmohocc
