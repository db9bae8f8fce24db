#include "mmohocc/engine.hpp"

#include <bit>
#include <random>

#include <gtest/gtest.h>

#include "mmohocc/errors.hpp"
#include "mmohocc/hex.hpp"
#include "mmohocc/hopping.hpp"

namespace mmohocc {
namespace {

std::vector<std::uint8_t> seq(std::uint8_t first, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(first + i);
  return out;
}

std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

TEST(StartOrbitTest, ZeroOffsetKeepsSeed) {
  const auto m = MapDescriptor::logistic(3.97);
  for (int hop = 1; hop <= 35; ++hop) EXPECT_EQ(start_orbit(m, 0.3, 0.0, hop), 0.3);
}

TEST(StartOrbitTest, FoldsIntoOpenDomain) {
  const auto m = MapDescriptor::logistic(3.97);
  for (int hop = 1; hop <= 35; ++hop) {
    const double x = start_orbit(m, 0.9999, 0.031, hop);
    EXPECT_GT(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  // 0.9999 + 35 * 0.031 * 0.19 = 1.205... wraps to about 0.2
  EXPECT_NEAR(start_orbit(m, 0.9999, 0.031, 35), 0.20605, 1e-4);
}

TEST(StartOrbitTest, QuadraticFormulaOracle) {
  const auto m = MapDescriptor::quadratic(-1.99);
  EXPECT_EQ(start_orbit(m, -1.5, 0.03, 11), -0x1.6ff2e48e8a71ep+0);
}

TEST(StartOrbitTest, SeedOutsideBetaIsFolded) {
  const auto m = MapDescriptor::quadratic(-1.91);
  const double x = start_orbit(m, 1.99, 0.001, 1);
  EXPECT_TRUE(m.contains_open(x));
}

TEST(HopCursorTest, SectionExampleNest) {
  HopCursor c({{11, 17}});
  EXPECT_EQ(c.pass_words(), 187u);
  for (int i = 0; i < 17; ++i) {
    EXPECT_EQ(c.hop_position(), 0u);
    c.advance();
  }
  EXPECT_EQ(c.hop_position(), 1u);
  for (int i = 17; i < 187; ++i) c.advance();
  EXPECT_EQ(c.hop_position(), 0u);
  EXPECT_EQ(c.sample_index(), 0);
}

TEST(HopCursorTest, WrapsAcrossMaps) {
  HopCursor c({{2, 3}, {3, 1}});
  EXPECT_EQ(c.pass_words(), 9u);
  for (int i = 0; i < 6; ++i) c.advance();
  EXPECT_EQ(c.map_index(), 1u);
  for (int i = 0; i < 3; ++i) c.advance();
  EXPECT_EQ(c.map_index(), 0u);
  EXPECT_EQ(c.hop_position(), 0u);
}

TEST(EngineTest, GoldenVector128) {
  const auto ks = keystream(MasterKey(Variant::k128, seq(0, 16)), InitVector(seq(0xA0, 8)), 64);
  EXPECT_EQ(to_hex(ks),
            "55858e978dffd4b25c959b9fa2fcdd9a6acc9e320438ad7e526b51c1920bd620"
            "a77b846657b35ff88c22cc7db1d5d7dd51a7e361b344f67fbc51922da604bcc6");
}

TEST(EngineTest, GoldenVector512) {
  const auto ks = keystream(MasterKey(Variant::k512, seq(0, 64)), InitVector(seq(0xB0, 16)), 32);
  EXPECT_EQ(to_hex(ks), "82d16cd72f1738dad9ffe194f742617b11a10457fe7b92a21d69f452d7088a2e");
}

TEST(EngineTest, TruncationRule) {
  const MasterKey key(Variant::k128, seq(7, 16));
  const InitVector iv(seq(1, 8));
  EXPECT_TRUE(keystream(key, iv, 0).empty());
  const auto full = keystream(key, iv, 4);
  const auto three = keystream(key, iv, 3);
  EXPECT_EQ(three, std::vector<std::uint8_t>(full.begin(), full.begin() + 3));
}

TEST(EngineTest, ChunkingDoesNotChangeStream) {
  const MasterKey key(Variant::k256, seq(3, 32));
  const InitVector iv(seq(9, 8));
  const auto whole = keystream(key, iv, 50000);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    Engine e(key, iv);
    std::vector<std::uint8_t> pieces;
    while (pieces.size() < whole.size()) {
      std::vector<std::uint8_t> part(std::min<std::size_t>(rng() % 97, whole.size() - pieces.size()));
      e.generate(part);
      pieces.insert(pieces.end(), part.begin(), part.end());
    }
    EXPECT_EQ(pieces, whole);
  }
}

TEST(EngineTest, NextWordMatchesByteStream) {
  const MasterKey key(Variant::k128, seq(40, 16));
  const InitVector iv(seq(2, 8));
  const auto bytes = keystream(key, iv, 20000);
  Engine e(key, iv);
  for (std::size_t i = 0; i < bytes.size(); i += 2) {
    const KeystreamWord w = e.next_word();
    ASSERT_EQ(w.p, bytes[i]);
    ASSERT_EQ(w.q, bytes[i + 1]);
  }
}

// Re-derives the first words of map 0 from the chaos primitives and the
// hopping table: settle the first pattern orbit, then sample it.
TEST(EngineTest, EmissionOrderFollowsPatternThenSamples) {
  const MasterKey key(Variant::k128, seq(0x55, 16));
  const InitVector iv(seq(0x11, 8));
  const auto subkeys = schedule(key, iv);
  const MapBank& bank = default_bank(Variant::k128);
  Engine e(bank, subkeys);

  const SubKey& k = subkeys[0];
  const auto order = pattern(k.hpsn, k.orbits()).order;
  for (int visit = 0; visit < 2; ++visit) {
    double x = start_orbit(k, bank[0], order[static_cast<std::size_t>(visit)]);
    for (int s = 0; s < k.settles(); ++s) x = guarded_step(bank[0], x);
    for (int s = 0; s < k.samples(); ++s) {
      x = guarded_step(bank[0], x);
      ASSERT_EQ(e.next_word(), extract_word(x)) << "visit " << visit << " sample " << s;
    }
    EXPECT_EQ(e.orbit_point(0, order[static_cast<std::size_t>(visit)]), x);
  }
  EXPECT_FALSE(e.orbit_point(0, order[2]).has_value());
}

TEST(EngineTest, PassLengthAndOrbitStateCarry) {
  const MasterKey key(Variant::k128, seq(0x21, 16));
  const InitVector iv(seq(0x31, 8));
  Engine e(key, iv);
  std::size_t expected = 0;
  for (std::size_t i = 0; i < e.map_count(); ++i) {
    expected += static_cast<std::size_t>(e.subkey(i).orbits() * e.subkey(i).samples());
  }
  EXPECT_EQ(e.pass_words(), expected);
  for (std::size_t i = 0; i < e.pass_words(); ++i) e.next_word();
  EXPECT_EQ(e.cursor().map_index(), 0u);
  EXPECT_EQ(e.cursor().hop_position(), 0u);
  for (std::size_t lane = 0; lane < e.map_count(); ++lane) {
    for (int o = 1; o <= e.subkey(lane).orbits(); ++o) {
      const auto x = e.orbit_point(lane, o);
      ASSERT_TRUE(x.has_value());
      EXPECT_TRUE(e.map(lane).contains_open(*x));
    }
  }
}

TEST(EngineTest, DeterministicMillionWords) {
  const MasterKey key(Variant::k128, seq(0x77, 16));
  const InitVector iv(seq(0x66, 8));
  EXPECT_EQ(keystream(key, iv, 2000000), keystream(key, iv, 2000000));
}

TEST(EngineTest, KeyFormatErrors) {
  EXPECT_THROW(keystream(MasterKey(Variant::k128, seq(0, 16)), InitVector(seq(0, 16)), 4),
               KeyFormatError);
  const MapBank& bank = default_bank(Variant::k512);
  EXPECT_THROW(Engine(bank, SubKeySet(8)), std::invalid_argument);
}

TEST(CipherTest, ZeroPlaintextGivesKeystream) {
  const MasterKey key(Variant::k128, seq(1, 16));
  const InitVector iv(seq(2, 8));
  EXPECT_EQ(encrypt(key, iv, std::vector<std::uint8_t>(1000, 0)), keystream(key, iv, 1000));
}

TEST(CipherTest, RoundTrip) {
  std::mt19937_64 rng(8);
  for (Variant v : {Variant::k128, Variant::k256, Variant::k512}) {
    const MasterKey key(v, random_bytes(rng, key_size(v)));
    const InitVector iv(random_bytes(rng, iv_size(v)));
    for (std::size_t n : {0u, 1u, 583u, 4096u, 65537u}) {
      const auto msg = random_bytes(rng, n);
      EXPECT_EQ(decrypt(key, iv, encrypt(key, iv, msg)), msg);
    }
  }
}

TEST(CipherTest, WrongIvScramblesHalfTheBits) {
  std::mt19937_64 rng(21);
  const MasterKey key(Variant::k128, random_bytes(rng, 16));
  const auto msg = random_bytes(rng, 12500);  // 10^5 bits
  const auto ct = encrypt(key, InitVector(seq(0, 8)), msg);
  const auto back = decrypt(key, InitVector(seq(1, 8)), ct);
  std::size_t diff = 0;
  for (std::size_t i = 0; i < msg.size(); ++i) {
    diff += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(msg[i] ^ back[i])));
  }
  const double frac = static_cast<double>(diff) / 100000.0;
  EXPECT_NEAR(frac, 0.5, 0.01);
}

TEST(EngineInvariantTest, IvIndependence) {
  std::mt19937_64 rng(1000);
  const MasterKey key(Variant::k128, random_bytes(rng, 16));
  for (int pair = 0; pair < 1000; ++pair) {
    Engine a(key, InitVector(random_bytes(rng, 8)));
    Engine b(key, InitVector(random_bytes(rng, 8)));
    int first_diff = -1;
    for (int w = 0; w < 64 && first_diff < 0; ++w) {
      if (a.next_word() != b.next_word()) first_diff = w;
    }
    EXPECT_GE(first_diff, 0);
    EXPECT_LT(first_diff, 4);
  }
}

TEST(EngineInvariantTest, ConsecutivePassesDiffer) {
  std::mt19937_64 rng(100);
  for (int t = 0; t < 100; ++t) {
    Engine e(MasterKey(Variant::k128, random_bytes(rng, 16)), InitVector(random_bytes(rng, 8)));
    const std::size_t n = e.pass_words() * 2;
    std::vector<std::uint8_t> first(n), second(n);
    e.generate(first);
    e.generate(second);
    EXPECT_NE(first, second);
  }
}

TEST(EngineInvariantTest, WordBitBalance) {
  std::mt19937_64 rng(77);
  Engine e(MasterKey(Variant::k128, random_bytes(rng, 16)), InitVector(random_bytes(rng, 8)));
  constexpr int kWords = 1000000;
  std::array<int, 16> ones{};
  for (int i = 0; i < kWords; ++i) {
    const std::uint16_t w = e.next_word().packed();
    for (int b = 0; b < 16; ++b) ones[static_cast<std::size_t>(b)] += (w >> b) & 1;
  }
  for (int b = 0; b < 16; ++b) {
    const double f = ones[static_cast<std::size_t>(b)] / static_cast<double>(kWords);
    EXPECT_GE(f, 0.49) << "bit " << b;
    EXPECT_LE(f, 0.51) << "bit " << b;
  }
}

}  // namespace
}  // namespace mmohocc
