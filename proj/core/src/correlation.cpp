#include "mmohocc/correlation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <stdexcept>

#include "mmohocc/errors.hpp"

namespace mmohocc {

namespace {

void check_lag(std::size_t n, std::int64_t lag) {
  if (n == 0) throw std::invalid_argument("correlation of an empty sequence");
  if (static_cast<std::size_t>(std::llabs(lag)) * 2 > n) {
    throw std::out_of_range("lag exceeds N/2");
  }
}

// sum_n a_n * b_{(n + shift) mod N}
std::size_t overlap(const BitSequence& a, const BitSequence& b, std::size_t shift) {
  const auto words = a.words();
  std::size_t count = 0;
  for (std::size_t k = 0; k < words.size(); ++k) {
    // Padding bits of a's last word are zero, so b's wrapped bits are masked.
    count += static_cast<std::size_t>(std::popcount(words[k] & b.window64(k * 64 + shift)));
  }
  return count;
}

double correlate(const BitSequence& a, const BitSequence& b, std::int64_t lag) {
  const std::size_t n = a.size();
  const auto shift = static_cast<std::size_t>(
      ((lag % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) %
      static_cast<std::int64_t>(n));
  const double nn = static_cast<double>(n);
  const double mu_a = static_cast<double>(a.count_ones()) / nn;
  const double mu_b = static_cast<double>(b.count_ones()) / nn;
  return static_cast<double>(overlap(a, b, shift)) / nn - mu_a * mu_b;
}

}  // namespace

double autocorrelation(const BitSequence& s, std::int64_t lag) {
  check_lag(s.size(), lag);
  return correlate(s, s, lag);
}

double crosscorrelation(const BitSequence& a, const BitSequence& b, std::int64_t lag) {
  if (a.size() != b.size()) {
    throw LengthMismatch("cross-correlation needs equal-length sequences");
  }
  check_lag(a.size(), lag);
  return correlate(a, b, lag);
}

double CorrelationScan::max_abs(bool skip_zero_lag) const {
  double best = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (skip_zero_lag && first_lag + static_cast<std::int64_t>(i) == 0) continue;
    best = std::max(best, std::fabs(values[i]));
  }
  return best;
}

void CorrelationScan::write_csv(std::ostream& out) const {
  out << "lag,value\n";
  char buf[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%lld,%.17g\n",
                  static_cast<long long>(first_lag + static_cast<std::int64_t>(i)),
                  values[i]);
    out << buf;
  }
}

CorrelationScan correlation_scan(const BitSequence& a, const BitSequence& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("cross-correlation needs equal-length sequences");
  }
  if (a.empty() || a.size() % 2 != 0) {
    throw std::invalid_argument("correlation scans need a non-empty even length");
  }
  const auto half = static_cast<std::int64_t>(a.size() / 2);
  CorrelationScan scan;
  scan.first_lag = -half;
  scan.values.reserve(a.size() + 1);
  for (std::int64_t m = -half; m <= half; ++m) scan.values.push_back(correlate(a, b, m));
  return scan;
}

CorrelationScan correlation_scan(const BitSequence& s) {
  return correlation_scan(s, s);
}

}  // namespace mmohocc
