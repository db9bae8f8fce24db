#include "mmohocc/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>

#include "mmohocc/engine.hpp"
#include "mmohocc/errors.hpp"
#include "mmohocc/rc4.hpp"

namespace mmohocc {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::uint8_t, 16> kBenchKey = {
    0x2b, 0x7e, 0x15, 0x16, 0x28, 0xae, 0xd2, 0xa6,
    0xab, 0xf7, 0x15, 0x88, 0x09, 0xcf, 0x4f, 0x3c};
constexpr std::array<std::uint8_t, 8> kBenchIv = {0, 1, 2, 3, 4, 5, 6, 7};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

}  // namespace

std::vector<std::size_t> default_payload_sizes() {
  return {584 * 1024, 11200 * 1024, 22400 * 1024, 145600 * 1024};
}

std::vector<BenchResult> bench(const std::vector<std::size_t>& payload_sizes,
                               int trials) {
  if (trials < 3) throw ConfigError("benchmark needs at least 3 trials");
  if (payload_sizes.empty()) throw ConfigError("benchmark needs a payload size");
  for (std::size_t s : payload_sizes) {
    if (s == 0) throw ConfigError("payload size must be positive");
  }

  const MasterKey key(Variant::k128, kBenchKey);
  const InitVector iv(kBenchIv);
  std::vector<BenchResult> results;
  for (std::size_t size : payload_sizes) {
    std::vector<std::uint8_t> payload(size);
    for (std::size_t i = 0; i < size; ++i) payload[i] = static_cast<std::uint8_t>(i * 131u);

    std::vector<double> mm, rc, mm_setup, rc_setup;
    BenchResult r;
    r.payload_bytes = size;
    for (int t = 0; t < trials; ++t) {
      std::vector<std::uint8_t> buf = payload;
      auto t0 = Clock::now();
      Engine engine(key, iv);
      mm_setup.push_back(seconds_since(t0));
      t0 = Clock::now();
      engine.apply(buf);
      mm.push_back(seconds_since(t0));
      r.mmohocc_output_bytes = buf.size();

      buf = payload;
      t0 = Clock::now();
      Rc4 rc4(kBenchKey);
      rc_setup.push_back(seconds_since(t0));
      t0 = Clock::now();
      rc4.apply(buf);
      rc.push_back(seconds_since(t0));
      r.rc4_output_bytes = buf.size();
    }
    r.mmohocc_seconds = median(mm);
    r.rc4_seconds = median(rc);
    r.mmohocc_setup_seconds = median(mm_setup);
    r.rc4_setup_seconds = median(rc_setup);
    results.push_back(r);
  }
  return results;
}

std::string format_table(const std::vector<BenchResult>& results) {
  std::string out;
  char buf[64];
  auto row = [&](const char* label, auto cell) {
    std::snprintf(buf, sizeof buf, "%-10s", label);
    out += buf;
    for (const auto& r : results) {
      cell(r);
      out += buf;
    }
    out += '\n';
  };
  row("", [&](const BenchResult& r) {
    std::snprintf(buf, sizeof buf, "%14zuKB", r.payload_bytes / 1024);
  });
  row("RC4", [&](const BenchResult& r) {
    std::snprintf(buf, sizeof buf, "%15.3fs", r.rc4_seconds);
  });
  row("Mmohocc", [&](const BenchResult& r) {
    std::snprintf(buf, sizeof buf, "%15.3fs", r.mmohocc_seconds);
  });
  row("ratio", [&](const BenchResult& r) {
    std::snprintf(buf, sizeof buf, "%16.2f", r.ratio());
  });
  return out;
}

std::string format_csv(const std::vector<BenchResult>& results) {
  std::string out =
      "payload_bytes,rc4_seconds,mmohocc_seconds,rc4_mbps,mmohocc_mbps,ratio,"
      "rc4_setup_seconds,mmohocc_setup_seconds\n";
  char buf[256];
  for (const auto& r : results) {
    std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f,%.3f,%.3f,%.4f,%.9f,%.9f\n",
                  r.payload_bytes, r.rc4_seconds, r.mmohocc_seconds, r.rc4_mbps(),
                  r.mmohocc_mbps(), r.ratio(), r.rc4_setup_seconds,
                  r.mmohocc_setup_seconds);
    out += buf;
  }
  return out;
}

}  // namespace mmohocc
