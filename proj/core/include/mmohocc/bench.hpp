#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mmohocc {

struct BenchResult {
  std::size_t payload_bytes = 0;
  double mmohocc_seconds = 0.0;  // median, keystream + XOR, setup excluded
  double rc4_seconds = 0.0;
  double mmohocc_setup_seconds = 0.0;  // median key schedule + bank setup
  double rc4_setup_seconds = 0.0;
  std::size_t mmohocc_output_bytes = 0;
  std::size_t rc4_output_bytes = 0;

  double mmohocc_mbps() const noexcept { return payload_bytes / 1e6 / mmohocc_seconds; }
  double rc4_mbps() const noexcept { return payload_bytes / 1e6 / rc4_seconds; }
  double ratio() const noexcept { return mmohocc_seconds / rc4_seconds; }
};

// 584, 11200, 22400 and 145600 KiB.
std::vector<std::size_t> default_payload_sizes();

// Median wall-clock time over `trials` runs of keystream generation plus XOR
// for each payload size, both ciphers on the calling thread.
// Throws ConfigError for fewer than 3 trials, an empty size list, or a zero
// payload size.
std::vector<BenchResult> bench(const std::vector<std::size_t>& payload_sizes,
                               int trials);

std::string format_table(const std::vector<BenchResult>& results);
std::string format_csv(const std::vector<BenchResult>& results);

}  // namespace mmohocc
