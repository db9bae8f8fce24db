#include "mmohocc/cli.hpp"

#include <sys/random.h>

#include <cerrno>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>

#include "mmohocc/bench.hpp"
#include "mmohocc/bits.hpp"
#include "mmohocc/chaos.hpp"
#include "mmohocc/container.hpp"
#include "mmohocc/correlation.hpp"
#include "mmohocc/engine.hpp"
#include "mmohocc/errors.hpp"
#include "mmohocc/hex.hpp"
#include "mmohocc/hopping.hpp"
#include "mmohocc/key_schedule.hpp"
#include "mmohocc/nist.hpp"
#include "mmohocc/period.hpp"

namespace mmohocc::cli {

namespace {

using Bytes = std::vector<std::uint8_t>;

// Data problems (unreadable files, bad keys, malformed containers) exit 2;
// everything CLI11 rejects exits 1.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_bytes(const std::string& path, std::span<const std::uint8_t> data,
                 std::ostream& out) {
  if (path.empty()) {
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw DataError("cannot write " + path);
  f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!f) throw DataError("write failed: " + path);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  write_bytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()),
              out);
}

Bytes os_random(std::size_t n) {
  Bytes buf(n);
  std::size_t got = 0;
  while (got < n) {
    const ssize_t r = getrandom(buf.data() + got, n - got, 0);
    if (r < 0) {
      if (errno == EINTR) continue;
      throw std::system_error(errno, std::generic_category(), "getrandom");
    }
    got += static_cast<std::size_t>(r);
  }
  return buf;
}

Variant parse_variant(int bits) {
  switch (bits) {
    case 128: return Variant::k128;
    case 256: return Variant::k256;
    case 512: return Variant::k512;
  }
  throw UsageError("variant must be 128, 256 or 512");
}

struct KeyArgs {
  std::string hex;
  std::string file;
  std::string iv;

  void add(CLI::App* cmd, bool with_iv) {
    auto* k = cmd->add_option("--key", hex, "master key as hex");
    auto* f = cmd->add_option("--key-file", file, "file holding the raw key octets");
    k->excludes(f);
    if (with_iv) cmd->add_option("--iv", iv, "initialization vector as hex")->required();
  }

  MasterKey key() const {
    if (!hex.empty()) return MasterKey::from_bytes(from_hex(hex));
    if (!file.empty()) return MasterKey::from_bytes(read_file(file));
    throw UsageError("one of --key or --key-file is required");
  }

  InitVector init_vector() const { return InitVector(from_hex(iv)); }
};

std::string describe(const MapDescriptor& m) {
  std::ostringstream s;
  s << (m.kind() == MapKind::kLogistic ? "logistic " : "quadratic ") << m.param();
  return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mmohocc chaotic stream cipher", "mmohocc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mmohocc 0.1.0");

  // keygen
  int keygen_variant = 128;
  auto* keygen = app.add_subcommand("keygen", "random key and IV from the OS entropy source");
  keygen->add_option("--variant", keygen_variant, "128, 256 or 512")->capture_default_str();

  // encrypt / decrypt
  KeyArgs enc_key, dec_key;
  std::string enc_in, enc_out, dec_in, dec_out;
  auto* enc = app.add_subcommand("encrypt", "encrypt a file into an MMOH container");
  enc_key.add(enc, true);
  enc->add_option("--in", enc_in, "plaintext file")->required();
  enc->add_option("--out", enc_out, "container file (default stdout)");
  auto* dec = app.add_subcommand("decrypt", "decrypt an MMOH container");
  dec_key.add(dec, false);
  dec->add_option("--in", dec_in, "container file")->required();
  dec->add_option("--out", dec_out, "plaintext file (default stdout)");

  // keystream
  KeyArgs ks_key;
  std::size_t ks_bytes = 0;
  std::string ks_out;
  auto* ks = app.add_subcommand("keystream", "dump raw keystream octets");
  ks_key.add(ks, true);
  ks->add_option("--bytes", ks_bytes, "number of octets")->required();
  ks->add_option("--out", ks_out, "output file (default stdout)");

  // patterns
  int pat_orbits = 0;
  std::string pat_out;
  auto* pat = app.add_subcommand("patterns", "hopping-pattern table as CSV, one row per hpsn");
  pat->add_option("--orbits", pat_orbits, "orbits per map")
      ->required()
      ->check(CLI::Range(kMinPatternOrbits, kMaxPatternOrbits));
  pat->add_option("--out", pat_out, "output file (default stdout)");

  // bank
  int bank_variant = 128;
  auto* bank = app.add_subcommand("bank", "map bank manifest with exact parameter bits");
  bank->add_option("--variant", bank_variant, "128, 256 or 512")->capture_default_str();

  // analyze
  KeyArgs an_key;
  std::string an_in, an_with, an_out, an_format = "text";
  std::size_t an_bits = 0;
  bool an_corr = false, an_nist = false;
  auto* an = app.add_subcommand("analyze", "correlation scan or NIST subset on a bitstream");
  an->add_option("--in", an_in, "packed bitstream file");
  an->add_option("--key", an_key.hex, "generate the bitstream from this key");
  an->add_option("--iv", an_key.iv, "IV for --key");
  an->add_option("--bits", an_bits, "bits to analyze (required with --key)");
  an->add_option("--with", an_with, "second bitstream for cross-correlation");
  auto* an_c = an->add_flag("--correlation", an_corr, "lag scan as lag,value CSV");
  auto* an_n = an->add_flag("--nist", an_nist, "SP 800-22 subset");
  an_c->excludes(an_n);
  an->add_option("--format", an_format, "text or kv (NIST reports)")
      ->check(CLI::IsMember({"text", "kv"}));
  an->add_option("--out", an_out, "output file (default stdout)");

  // statespace
  KeyArgs ss_key;
  std::size_t ss_maps = 0;
  int ss_orbits = 0;
  auto* ss = app.add_subcommand("statespace", "state-space size in bits");
  ss->add_option("--key", ss_key.hex, "derive orbit counts from this key");
  ss->add_option("--iv", ss_key.iv, "IV for --key");
  ss->add_option("--maps", ss_maps, "number of maps");
  ss->add_option("--orbits", ss_orbits, "orbits per map");

  // cyclelab
  int cl_variant = 128;
  unsigned cl_bits = 8;
  KeyArgs cl_key;
  std::size_t cl_lanes = 2;
  std::uint64_t cl_max = std::uint64_t{1} << 32;
  auto* cl = app.add_subcommand("cyclelab", "cycle lengths on a quantized grid");
  cl->add_option("--variant", cl_variant, "map bank to study")->capture_default_str();
  cl->add_option("--bits", cl_bits, "grid precision")
      ->check(CLI::Range(4, 24))
      ->capture_default_str();
  cl->add_option("--key", cl_key.hex, "also run the quantized engine with this key");
  cl->add_option("--iv", cl_key.iv, "IV for --key");
  cl->add_option("--lanes", cl_lanes, "engine lanes (first maps of the bank)")
      ->capture_default_str();
  cl->add_option("--max-words", cl_max, "give up after this many words")->capture_default_str();

  // bench
  std::vector<std::size_t> bench_sizes;
  int bench_trials = 5;
  bool bench_csv = false;
  auto* bn = app.add_subcommand("bench", "throughput against RC4");
  bn->add_option("--sizes", bench_sizes, "payload sizes in KiB (default 584 11200 22400 145600)");
  bn->add_option("--trials", bench_trials, "trials per size (median)")->capture_default_str();
  bn->add_flag("--csv", bench_csv, "CSV instead of a table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "mmohocc 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mmohocc: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*keygen) {
      const Variant v = parse_variant(keygen_variant);
      out << "key=" << to_hex(os_random(key_size(v))) << '\n';
      out << "iv=" << to_hex(os_random(iv_size(v))) << '\n';
    } else if (*enc) {
      const Bytes plain = read_file(enc_in);
      write_bytes(enc_out, seal(enc_key.key(), enc_key.init_vector(), plain), out);
    } else if (*dec) {
      const Bytes sealed = read_file(dec_in);
      write_bytes(dec_out, open(dec_key.key(), sealed), out);
    } else if (*ks) {
      write_bytes(ks_out, keystream(ks_key.key(), ks_key.init_vector(), ks_bytes), out);
    } else if (*pat) {
      write_text(pat_out, table_csv(pat_orbits), out);
    } else if (*bank) {
      out << bank_manifest(default_bank(parse_variant(bank_variant)));
    } else if (*an) {
      if (!an_corr && !an_nist) throw UsageError("analyze needs --correlation or --nist");
      auto load = [&](const std::string& path) {
        const Bytes raw = read_file(path);
        const std::size_t n = an_bits ? an_bits : raw.size() * 8;
        if (n > raw.size() * 8) throw DataError(path + " holds fewer than --bits bits");
        return BitSequence::from_bytes(raw, n);
      };
      BitSequence s;
      if (!an_in.empty()) {
        s = load(an_in);
      } else if (!an_key.hex.empty()) {
        if (an_bits == 0) throw UsageError("--bits is required with --key");
        const Bytes raw = keystream(an_key.key(), an_key.init_vector(), (an_bits + 7) / 8);
        s = BitSequence::from_bytes(raw, an_bits);
      } else {
        throw UsageError("analyze needs --in or --key");
      }
      std::ostringstream text;
      if (an_corr) {
        const CorrelationScan scan =
            an_with.empty() ? correlation_scan(s) : correlation_scan(s, load(an_with));
        scan.write_csv(text);
      } else {
        for (const auto& r : nist_subset(s)) {
          text << (an_format == "kv" ? format_record(r) : format_text(r)) << '\n';
        }
      }
      write_text(an_out, text.str(), out);
    } else if (*ss) {
      std::uint64_t bits = 0;
      if (!ss_key.hex.empty()) {
        const MasterKey key = ss_key.key();
        bits = state_space_bits(key.variant(), schedule(key, ss_key.init_vector()));
      } else if (ss_maps > 0 && ss_orbits > 0) {
        bits = state_space_bits(ss_maps, ss_orbits);
      } else {
        throw UsageError("statespace needs --key/--iv or --maps and --orbits");
      }
      out << "state_space_bits=" << bits << '\n';
      out << "period_estimate=2^" << bits << '\n';
    } else if (*cl) {
      const MapBank& maps = default_bank(parse_variant(cl_variant));
      std::uint64_t longest = 0;
      for (const auto& m : maps) {
        const std::uint64_t c = longest_cycle(m, cl_bits);
        longest = std::max(longest, c);
        out << describe(m) << " longest_cycle=" << c << '\n';
      }
      out << "single_orbit_max=" << longest << '\n';
      if (!cl_key.hex.empty()) {
        const MasterKey key = cl_key.key();
        if (key.variant() != parse_variant(cl_variant)) {
          throw UsageError("--key does not match --variant");
        }
        if (cl_lanes < 1 || cl_lanes > maps.size()) throw UsageError("--lanes out of range");
        const SubKeySet all = schedule(key, cl_key.init_vector());
        const std::vector<MapDescriptor> lane_maps(maps.begin(), maps.begin() + cl_lanes);
        const SubKeySet lanes(all.begin(), all.begin() + cl_lanes);
        const EngineCycle ec = engine_cycle(lane_maps, lanes, cl_bits, cl_max);
        out << "engine_complete=" << (ec.complete ? 1 : 0) << '\n';
        out << "engine_tail=" << ec.state.tail << '\n';
        out << "engine_state_cycle=" << ec.state.cycle << '\n';
        out << "engine_output_cycle=" << ec.output_cycle << '\n';
      }
    } else if (*bn) {
      std::vector<std::size_t> sizes = default_payload_sizes();
      if (!bench_sizes.empty()) {
        sizes.clear();
        for (std::size_t kib : bench_sizes) sizes.push_back(kib * 1024);
      }
      const auto results = bench(sizes, bench_trials);
      out << (bench_csv ? format_csv(results) : format_table(results));
    }
    out.flush();
  } catch (const UsageError& e) {
    err << "mmohocc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "mmohocc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "mmohocc: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace mmohocc::cli
