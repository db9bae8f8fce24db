#include "mmohocc/nist.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <span>

#include <boost/math/special_functions/gamma.hpp>

#include "mmohocc/errors.hpp"

namespace mmohocc {

namespace {

double igamc(double a, double x) {
  return boost::math::gamma_q(a, std::max(0.0, x));
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

void require(const BitSequence& s, std::size_t n, const char* test) {
  if (s.size() < n) throw SequenceTooShort(test, s.size(), n);
}

TestReport make(std::string id, std::string name, double statistic, double p) {
  p = std::clamp(p, 0.0, 1.0);
  return TestReport{std::move(id), std::move(name), statistic, p, p >= kNistAlpha};
}

// Overlapping m-bit pattern counts with the first m-1 bits appended, so every
// position 0..n-1 starts a pattern.
std::vector<std::uint32_t> pattern_counts(const BitSequence& s, unsigned m) {
  std::vector<std::uint32_t> counts(std::size_t{1} << m, 0);
  if (m == 0) {
    counts[0] = static_cast<std::uint32_t>(s.size());
    return counts;
  }
  const std::size_t n = s.size();
  const std::uint32_t mask = (m == 32) ? ~0u : ((1u << m) - 1u);
  std::uint32_t window = 0;
  for (unsigned k = 0; k + 1 < m; ++k) window = window << 1 | s[k % n];
  for (std::size_t i = 0; i < n; ++i) {
    window = ((window << 1) | s[(i + m - 1) % n]) & mask;
    ++counts[window];
  }
  return counts;
}

double psi_squared(const BitSequence& s, unsigned m) {
  if (m == 0) return 0.0;
  const double n = static_cast<double>(s.size());
  double sum = 0.0;
  for (std::uint32_t c : pattern_counts(s, m)) sum += static_cast<double>(c) * c;
  return sum * std::ldexp(1.0, static_cast<int>(m)) / n - n;
}

double phi(const BitSequence& s, unsigned m) {
  const double n = static_cast<double>(s.size());
  double sum = 0.0;
  for (std::uint32_t c : pattern_counts(s, m)) {
    if (c == 0) continue;
    const double p = c / n;
    sum += p * std::log(p);
  }
  return sum;
}

}  // namespace

TestReport monobit(const BitSequence& s) {
  require(s, 100, "monobit");
  const double n = static_cast<double>(s.size());
  const double sum = 2.0 * static_cast<double>(s.count_ones()) - n;
  const double stat = std::fabs(sum) / std::sqrt(n);
  return make("monobit", "Frequency (Monobit)", stat, std::erfc(stat / std::sqrt(2.0)));
}

TestReport block_frequency(const BitSequence& s, std::size_t block) {
  require(s, std::max<std::size_t>(100, block), "block_frequency");
  const std::size_t blocks = s.size() / block;
  double chi2 = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < block; ++j) ones += s[b * block + j];
    const double pi = static_cast<double>(ones) / static_cast<double>(block);
    chi2 += (pi - 0.5) * (pi - 0.5);
  }
  chi2 *= 4.0 * static_cast<double>(block);
  return make("block_frequency", "Block Frequency", chi2,
              igamc(static_cast<double>(blocks) / 2.0, chi2 / 2.0));
}

TestReport cumulative_sums(const BitSequence& s, bool forward) {
  require(s, 100, forward ? "cusum_forward" : "cusum_reverse");
  const std::size_t n = s.size();
  long long sum = 0;
  long long z = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += s[forward ? i : n - 1 - i] ? 1 : -1;
    z = std::max(z, std::llabs(sum));
  }
  const double nn = static_cast<double>(n);
  const double zz = static_cast<double>(z);
  const double root = std::sqrt(nn);
  // Bounds truncate toward zero, as in the reference implementation.
  double sum1 = 0.0;
  for (auto k = static_cast<long long>((-nn / zz + 1) / 4);
       k <= static_cast<long long>((nn / zz - 1) / 4); ++k) {
    sum1 += normal_cdf((4 * k + 1) * zz / root) - normal_cdf((4 * k - 1) * zz / root);
  }
  double sum2 = 0.0;
  for (auto k = static_cast<long long>((-nn / zz - 3) / 4);
       k <= static_cast<long long>((nn / zz - 1) / 4); ++k) {
    sum2 += normal_cdf((4 * k + 3) * zz / root) - normal_cdf((4 * k + 1) * zz / root);
  }
  return make(forward ? "cusum_forward" : "cusum_reverse",
              forward ? "Cumulative Sums (Forward)" : "Cumulative Sums (Reverse)", zz,
              1.0 - sum1 + sum2);
}

TestReport runs(const BitSequence& s) {
  require(s, 100, "runs");
  const std::size_t n = s.size();
  const double nn = static_cast<double>(n);
  const double pi = static_cast<double>(s.count_ones()) / nn;
  std::size_t v = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) v += s[i] != s[i + 1];
  const double vobs = static_cast<double>(v);
  if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(nn)) {
    return make("runs", "Runs", vobs, 0.0);
  }
  const double p = std::erfc(std::fabs(vobs - 2.0 * nn * pi * (1.0 - pi)) /
                             (2.0 * std::sqrt(2.0 * nn) * pi * (1.0 - pi)));
  return make("runs", "Runs", vobs, p);
}

TestReport longest_run_of_ones(const BitSequence& s) {
  require(s, 128, "longest_run");
  struct Params {
    std::size_t block;
    std::size_t low;  // runs <= low share the first bin
    std::vector<double> pi;
  };
  static const Params kSmall{8, 1, {0.2148, 0.3672, 0.2305, 0.1875}};
  static const Params kMedium{128, 4, {0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124}};
  static const Params kLarge{
      10000, 10, {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727}};
  const std::size_t n = s.size();
  const Params& p = n < 6272 ? kSmall : (n < 750000 ? kMedium : kLarge);

  const std::size_t blocks = n / p.block;
  const std::size_t bins = p.pi.size();
  std::vector<double> counts(bins, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t run = 0;
    std::size_t longest = 0;
    for (std::size_t j = 0; j < p.block; ++j) {
      run = s[b * p.block + j] ? run + 1 : 0;
      longest = std::max(longest, run);
    }
    const std::size_t bin =
        longest <= p.low ? 0 : std::min(longest - p.low, bins - 1);
    counts[bin] += 1.0;
  }
  double chi2 = 0.0;
  const double nb = static_cast<double>(blocks);
  for (std::size_t i = 0; i < bins; ++i) {
    const double expected = nb * p.pi[i];
    chi2 += (counts[i] - expected) * (counts[i] - expected) / expected;
  }
  const double k = static_cast<double>(bins - 1);
  return make("longest_run", "Longest Run of Ones", chi2, igamc(k / 2.0, chi2 / 2.0));
}

std::vector<TestReport> serial(const BitSequence& s, unsigned m) {
  if (m < 3 || m > 24) throw std::invalid_argument("serial test needs 3 <= m <= 24");
  require(s, std::size_t{1} << m, "serial");
  const double p0 = psi_squared(s, m);
  const double p1 = psi_squared(s, m - 1);
  const double p2 = psi_squared(s, m - 2);
  const double d1 = p0 - p1;
  const double d2 = p0 - 2.0 * p1 + p2;
  return {make("serial_1", "Serial (first difference)", d1,
               igamc(std::ldexp(1.0, static_cast<int>(m) - 2), d1 / 2.0)),
          make("serial_2", "Serial (second difference)", d2,
               igamc(std::ldexp(1.0, static_cast<int>(m) - 3), d2 / 2.0))};
}

TestReport approximate_entropy(const BitSequence& s, unsigned m) {
  if (m < 1 || m > 24) throw std::invalid_argument("approximate entropy needs 1 <= m <= 24");
  require(s, std::size_t{1} << (m + 5), "approximate_entropy");
  const double n = static_cast<double>(s.size());
  const double apen = phi(s, m) - phi(s, m + 1);
  const double chi2 = 2.0 * n * (std::log(2.0) - apen);
  return make("approximate_entropy", "Approximate Entropy", chi2,
              igamc(std::ldexp(1.0, static_cast<int>(m) - 1), chi2 / 2.0));
}

std::vector<TestReport> nist_subset(const BitSequence& s) {
  require(s, kBatteryMinBits, "nist_subset");
  std::vector<TestReport> out;
  out.push_back(monobit(s));
  out.push_back(block_frequency(s, 128));
  out.push_back(cumulative_sums(s, true));
  out.push_back(cumulative_sums(s, false));
  out.push_back(runs(s));
  out.push_back(longest_run_of_ones(s));
  for (auto& r : serial(s, 16)) out.push_back(std::move(r));
  out.push_back(approximate_entropy(s, 10));
  return out;
}

std::string format_text(const TestReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-28s statistic=%-14.6f p=%.6f %s", r.name.c_str(),
                r.statistic, r.p_value, r.passed ? "PASS" : "FAIL");
  return buf;
}

std::string format_record(const TestReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "test=%s statistic=%.10g p_value=%.10g pass=%d",
                r.id.c_str(), r.statistic, r.p_value, r.passed ? 1 : 0);
  return buf;
}

}  // namespace mmohocc
