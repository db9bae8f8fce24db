#include "mmohocc/correlation.hpp"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "mmohocc/engine.hpp"
#include "mmohocc/errors.hpp"
#include "oracle_bits.hpp"

namespace mmohocc {
namespace {

using testdata::oracle_bits;

BitSequence alternating(std::size_t n) {
  BitSequence s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(i % 2 == 1);
  return s;
}

TEST(CorrelationTest, ConstantSequenceIsZero) {
  const auto s = BitSequence::from_bits(std::vector<std::uint8_t>(64, 1));
  for (int m = -32; m <= 32; ++m) EXPECT_EQ(autocorrelation(s, m), 0.0);
}

TEST(CorrelationTest, AlternatingSequence) {
  const auto s = alternating(1000);
  for (int m = -500; m <= 500; ++m) {
    EXPECT_DOUBLE_EQ(autocorrelation(s, m), (m % 2 == 0) ? 0.25 : -0.25);
  }
}

TEST(CorrelationTest, LagZeroIsVariance) {
  const auto s = oracle_bits(1000);
  const double mu = static_cast<double>(s.count_ones()) / 1000.0;
  EXPECT_NEAR(autocorrelation(s, 0), mu * (1.0 - mu), 1e-15);
  EXPECT_NEAR(crosscorrelation(s, s.complement(), 0), -mu * (1.0 - mu), 1e-15);
}

TEST(CorrelationTest, ExactRationalOracle) {
  const auto all = oracle_bits(2048);
  const auto a = all.slice(0, 1024);
  const auto b = all.slice(1024, 1024);
  EXPECT_NEAR(autocorrelation(a, 0), 0.2499990463256836, 1e-15);
  EXPECT_NEAR(autocorrelation(a, 1), -0.007813453674316406, 1e-15);
  EXPECT_NEAR(autocorrelation(a, 7), 0.004881858825683594, 1e-15);
  EXPECT_NEAR(autocorrelation(a, -300), 0.0029287338256835938, 1e-15);
  EXPECT_NEAR(crosscorrelation(a, b, 0), -4.76837158203125e-06, 1e-15);
  EXPECT_NEAR(crosscorrelation(a, b, 5), -0.0019578933715820312, 1e-15);
  EXPECT_NEAR(crosscorrelation(a, b, -512), -0.003911018371582031, 1e-15);
}

TEST(CorrelationTest, ScanMatchesPointwiseAndRotation) {
  const auto all = oracle_bits(1024);
  const auto a = all.slice(0, 512);
  const auto b = all.slice(512, 512);
  const auto self = correlation_scan(a);
  const auto cross = correlation_scan(a, b);
  ASSERT_EQ(self.values.size(), 513u);
  EXPECT_EQ(self.first_lag, -256);
  const auto ra = a.rotated(37);
  const auto rb = b.rotated(37);
  for (std::int64_t m = -256; m <= 256; ++m) {
    EXPECT_NEAR(self.at(m), autocorrelation(a, m), 1e-15);
    EXPECT_NEAR(self.at(m), crosscorrelation(a, a, m), 1e-15);
    EXPECT_NEAR(cross.at(m), crosscorrelation(a, b, m), 1e-15);
    EXPECT_NEAR(crosscorrelation(ra, rb, m), crosscorrelation(a, b, m), 1e-15);
    EXPECT_NEAR(autocorrelation(ra, m), autocorrelation(a, m), 1e-15);
  }
}

TEST(CorrelationTest, Errors) {
  const auto s = oracle_bits(100);
  EXPECT_THROW(autocorrelation(s, 51), std::out_of_range);
  EXPECT_THROW(autocorrelation(s, -51), std::out_of_range);
  EXPECT_THROW(crosscorrelation(s, oracle_bits(101), 0), LengthMismatch);
  EXPECT_THROW(correlation_scan(oracle_bits(101)), std::invalid_argument);
}

TEST(CorrelationTest, CsvShape) {
  std::ostringstream out;
  correlation_scan(alternating(4)).write_csv(out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "lag,value");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 5);
}

TEST(CorrelationTest, KeystreamSegmentsAreDeltaLike) {
  const auto ks = keystream(MasterKey(Variant::k128, std::vector<std::uint8_t>(16, 0x42)),
                            InitVector(std::vector<std::uint8_t>(8, 0x24)), 2048);
  const auto a = BitSequence::from_bytes(std::span(ks).first(1024));
  const auto b = BitSequence::from_bytes(std::span(ks).last(1024));
  const double bound = 5.0 * 0.25 / std::sqrt(8192.0);
  EXPECT_LE(correlation_scan(a).max_abs(true), bound);
  EXPECT_LE(correlation_scan(a, b).max_abs(false), bound);
  EXPECT_NEAR(autocorrelation(a, 0), 0.25, 0.01);
}

}  // namespace
}  // namespace mmohocc
