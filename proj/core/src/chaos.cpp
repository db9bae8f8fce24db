#include "mmohocc/chaos.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "mmohocc/errors.hpp"

namespace mmohocc {

std::size_t map_count(Variant v) noexcept {
  return v == Variant::k512 ? 16 : 8;
}

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::k128: return "128";
    case Variant::k256: return "256";
    case Variant::k512: return "512";
  }
  return "?";
}

MapDescriptor MapDescriptor::logistic(double r) {
  if (!(r > 3.57 && r <= 4.0)) {
    throw std::invalid_argument("logistic parameter must satisfy 3.57 < r <= 4");
  }
  return MapDescriptor(MapKind::kLogistic, r, 0.0, 1.0);
}

MapDescriptor MapDescriptor::quadratic(double c) {
  if (!(c >= -2.0 && c <= -1.9)) {
    throw std::invalid_argument("quadratic parameter must satisfy -2 <= c <= -1.9");
  }
  const double beta = (1.0 + std::sqrt(1.0 - 4.0 * c)) / 2.0;
  return MapDescriptor(MapKind::kQuadratic, c, -beta, beta);
}

MapDescriptor MapDescriptor::unrestricted(MapKind kind, double param) {
  if (kind == MapKind::kLogistic) {
    if (!(param > 0.0 && param <= 4.0)) {
      throw std::invalid_argument("logistic parameter must satisfy 0 < r <= 4");
    }
    return MapDescriptor(kind, param, 0.0, 1.0);
  }
  if (!(param >= -2.0 && param <= 0.25)) {
    throw std::invalid_argument("quadratic parameter must satisfy -2 <= c <= 1/4");
  }
  const double beta = (1.0 + std::sqrt(1.0 - 4.0 * param)) / 2.0;
  return MapDescriptor(kind, param, -beta, beta);
}

MapBank::MapBank(std::vector<MapDescriptor> maps) : maps_(std::move(maps)) {
  if (maps_.size() != 8 && maps_.size() != 16) {
    throw std::invalid_argument("a map bank holds exactly 8 or 16 maps");
  }
  bool logistic = false;
  bool quadratic = false;
  for (const auto& m : maps_) {
    (m.kind() == MapKind::kLogistic ? logistic : quadratic) = true;
  }
  if (!logistic || !quadratic) {
    throw std::invalid_argument("a map bank must mix logistic and quadratic maps");
  }
}

double iterate(const MapDescriptor& map, double x) {
  if (!map.contains(x)) {
    throw DomainError("orbit value outside the map domain", 0, x);
  }
  const double y = map.apply(x);
  if (!map.contains(y)) {
    throw DomainError("iterate left the map domain", 0, y);
  }
  return y;
}

double iterate_n(const MapDescriptor& map, double x, std::uint64_t n) {
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!map.contains(x)) {
      throw DomainError("orbit value outside the map domain", i, x);
    }
    x = map.apply(x);
    if (!map.contains(x)) {
      throw DomainError("iterate left the map domain", i, x);
    }
  }
  return x;
}

namespace {

MapBank build_bank(Variant v) {
  std::vector<MapDescriptor> maps = {
      MapDescriptor::logistic(3.99), MapDescriptor::quadratic(-1.99),
      MapDescriptor::logistic(3.97), MapDescriptor::quadratic(-1.97),
      MapDescriptor::logistic(3.93), MapDescriptor::quadratic(-1.93),
      MapDescriptor::logistic(3.91), MapDescriptor::quadratic(-1.91),
  };
  if (v == Variant::k512) {
    maps.insert(maps.end(), {
        MapDescriptor::logistic(3.98), MapDescriptor::quadratic(-1.98),
        MapDescriptor::logistic(3.96), MapDescriptor::quadratic(-1.96),
        MapDescriptor::logistic(3.95), MapDescriptor::quadratic(-1.95),
        MapDescriptor::logistic(3.94), MapDescriptor::quadratic(-1.94),
    });
  }
  for (const auto& m : maps) {
    const double probe = m.kind() == MapKind::kLogistic ? 0.1 : 0.0;
    if (!is_window_free(m, probe)) {
      throw std::logic_error("default bank contains a periodic-window parameter");
    }
  }
  return MapBank(std::move(maps));
}

}  // namespace

const MapBank& default_bank(Variant v) {
  static const MapBank small = build_bank(Variant::k128);
  static const MapBank large = build_bank(Variant::k512);
  return v == Variant::k512 ? large : small;
}

bool is_window_free(const MapDescriptor& map, double probe_seed,
                    std::uint64_t horizon) {
  if (horizon < 4096) {
    throw std::invalid_argument("is_window_free needs a horizon of at least 4096");
  }
  constexpr std::size_t kMaxPeriod = 64;
  constexpr std::size_t kTail = 3 * kMaxPeriod;

  double x = iterate_n(map, probe_seed, 1024);
  std::array<double, kTail> tail{};
  for (std::uint64_t i = 0; i < horizon; ++i) {
    x = iterate(map, x);
    tail[i % kTail] = x;
  }
  // tail[(horizon + k) % kTail] is the k-th oldest retained value.
  auto at = [&](std::size_t k) { return tail[(horizon + k) % kTail]; };
  for (std::size_t p = 1; p <= kMaxPeriod; ++p) {
    bool periodic = true;
    for (std::size_t k = p; k < kTail && periodic; ++k) {
      periodic = at(k) == at(k - p);
    }
    if (periodic) return false;
  }
  return true;
}

double nudge(const MapDescriptor& map, double y) noexcept {
  const double lo = map.domain_lo();
  const double hi = map.domain_hi();
  if (std::isnan(y)) return lo + (hi - lo) / 2.0;
  if (y <= lo) return lo + kDegenerateNudge;
  if (y >= hi) return hi - kDegenerateNudge;
  const double z = y + kDegenerateNudge;
  return z >= hi ? hi - kDegenerateNudge : z;
}

double guard_point(const MapDescriptor& map, double x) noexcept {
  if (!map.contains_open(x) || map.apply(x) == x) return nudge(map, x);
  return x;
}

std::string bank_manifest(const MapBank& bank) {
  std::string out;
  for (const auto& m : bank) {
    char line[64];
    std::snprintf(line, sizeof line, "%s 0x%016llx\n",
                  m.kind() == MapKind::kLogistic ? "logistic" : "quadratic",
                  static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(m.param())));
    out += line;
  }
  return out;
}

}  // namespace mmohocc
