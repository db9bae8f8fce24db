#pragma once

#include <string>
#include <vector>

#include "mmohocc/bits.hpp"

namespace mmohocc {

inline constexpr double kNistAlpha = 0.01;
inline constexpr std::size_t kBatteryMinBits = 100000;

struct TestReport {
  std::string id;    // short machine name, e.g. "monobit"
  std::string name;  // display name
  double statistic = 0.0;
  double p_value = 0.0;
  bool passed = false;  // p_value >= 0.01
};

// Statistics and p-values follow NIST SP 800-22 rev1a. Each test throws
// SequenceTooShort below its own minimum length.
TestReport monobit(const BitSequence& s);
TestReport block_frequency(const BitSequence& s, std::size_t block = 128);
TestReport cumulative_sums(const BitSequence& s, bool forward);
TestReport runs(const BitSequence& s);
TestReport longest_run_of_ones(const BitSequence& s);
// Two reports: the first and second differences of psi^2.
std::vector<TestReport> serial(const BitSequence& s, unsigned m = 16);
TestReport approximate_entropy(const BitSequence& s, unsigned m = 10);

// monobit, block frequency (128), cusum forward/reverse, runs, longest run,
// serial (m = 16, two p-values), approximate entropy (m = 10).
// Throws SequenceTooShort below 10^5 bits.
std::vector<TestReport> nist_subset(const BitSequence& s);

std::string format_text(const TestReport& r);
// "test=<id> statistic=<v> p_value=<v> pass=<0|1>"
std::string format_record(const TestReport& r);

}  // namespace mmohocc
