#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "mmohocc/bits.hpp"

namespace mmohocc {

// Circular estimators on {0,1} bits with mean subtraction:
//   CC(m) = (1/N) sum_n (a_n - mu_a)(b_{(n+m) mod N} - mu_b)
// AC is CC of a sequence with itself. Lags must satisfy |m| <= N/2
// (std::out_of_range otherwise).
double autocorrelation(const BitSequence& s, std::int64_t lag);

// Throws LengthMismatch for sequences of different length.
double crosscorrelation(const BitSequence& a, const BitSequence& b, std::int64_t lag);

struct CorrelationScan {
  std::int64_t first_lag = 0;  // -N/2
  std::vector<double> values;  // lags first_lag .. -first_lag

  double at(std::int64_t lag) const {
    return values.at(static_cast<std::size_t>(lag - first_lag));
  }
  // Largest |value|, optionally skipping lag 0.
  double max_abs(bool skip_zero_lag) const;
  void write_csv(std::ostream& out) const;  // "lag,value" header then rows
};

// Sweeps every lag in [-N/2, N/2]. N must be even.
CorrelationScan correlation_scan(const BitSequence& a, const BitSequence& b);
CorrelationScan correlation_scan(const BitSequence& s);

}  // namespace mmohocc
