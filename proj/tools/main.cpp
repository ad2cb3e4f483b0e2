// Command-line front end: file hashing, diffusion experiments, report
// emission.  See README.md for usage examples.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chaoshash/chaoshash.hpp"

namespace {

// Flags shared by every subcommand that hashes real input.
struct HashOpts {
  std::size_t n = 256;
  std::uint64_t key = 0;
  bool ascii7 = false;
  CLI::Option* key_opt = nullptr;

  void attach(CLI::App* cmd, bool with_encoding = true) {
    cmd->add_option("--n", n, "Digest length in bits (positive multiple of 4, at most 256)")
        ->capture_default_str();
    key_opt = cmd->add_option("--key", key, "64-bit key; omit for unkeyed hashing");
    if (with_encoding)
      cmd->add_flag("--ascii7", ascii7,
                    "Encode bytes as 7 bits (plain ASCII text); default is 8-bit raw");
  }

  chaoshash::HashParams params() const {
    chaoshash::HashParams p;
    p.digest_bits = n;
    p.encoding = ascii7 ? chaoshash::Encoding::kAscii7 : chaoshash::Encoding::kRaw8;
    if (key_opt != nullptr && key_opt->count() > 0) p.key = key;
    return p;
  }
};

std::vector<std::uint8_t> read_file_or_stdin(const std::string& name) {
  if (name == "-") {
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(std::cin)),
                                    std::istreambuf_iterator<char>());
    return bytes;
  }
  std::ifstream in(name, std::ios::binary);
  if (!in) throw chaoshash::FileError("cannot open '" + name + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw chaoshash::FileError("error while reading '" + name + "'");
  return bytes;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw chaoshash::FileError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw chaoshash::FileError("error while writing '" + path + "'");
}

std::string render(const chaoshash::AvalancheReport& r, const std::string& format) {
  if (format == "json") return chaoshash::to_json(r).dump(2) + "\n";
  if (format == "csv") return chaoshash::to_csv(r);
  return chaoshash::to_text(r);
}
std::string render(const chaoshash::UniformityReport& r, const std::string& format) {
  if (format == "json") return chaoshash::to_json(r).dump(2) + "\n";
  if (format == "csv") return chaoshash::to_csv(r);
  return chaoshash::to_text(r);
}
std::string render(const chaoshash::BenchReport& r, const std::string& format) {
  if (format == "json") return chaoshash::to_json(r).dump(2) + "\n";
  if (format == "csv") return chaoshash::to_csv(r);
  return chaoshash::to_text(r);
}
std::string render(const chaoshash::BatteryReport& r, const std::string& format) {
  if (format == "json") return chaoshash::to_json(r).dump(2) + "\n";
  if (format == "csv") return chaoshash::to_csv(r);
  return chaoshash::to_text(r);
}

// The seven-case battery protocol: the original media, three local
// text-style edits, a second media, and two one-unit pixel-style edits
// of the second media.  With a single input file the second media is
// its byte reversal.
std::vector<chaoshash::BatteryInput> battery_cases(const std::vector<std::uint8_t>& media,
                                                   const std::vector<std::uint8_t>& media2,
                                                   const chaoshash::HashParams& params) {
  using Bytes = std::vector<std::uint8_t>;
  auto flip_bit5_at = [](Bytes b, std::size_t pos) {
    if (!b.empty()) b[pos % b.size()] ^= 0x20;  // letter-case style flip
    return b;
  };
  auto xor_at = [](Bytes b, std::size_t pos, std::uint8_t mask) {
    if (!b.empty()) b[pos % b.size()] ^= mask;
    return b;
  };
  auto add_at = [](Bytes b, std::size_t pos, int delta) {
    if (!b.empty()) {
      std::size_t i = pos % b.size();
      b[i] = static_cast<std::uint8_t>((b[i] + 256 + delta) % 256);
    }
    return b;
  };
  std::vector<chaoshash::BatteryInput> inputs;
  inputs.push_back({"case1-original", media, params});
  inputs.push_back({"case2-midword", flip_bit5_at(media, media.size() / 2), params});
  inputs.push_back({"case3-lastbyte", xor_at(media, media.empty() ? 0 : media.size() - 1, 0x02),
                    params});
  inputs.push_back({"case4-firstbyte", flip_bit5_at(media, 0), params});
  inputs.push_back({"case5-media2", media2, params});
  inputs.push_back({"case6-plus1", add_at(media2, 123 * 27, +1), params});
  inputs.push_back({"case7-minus1", add_at(media2, 23 * 127, -1), params});
  return inputs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chaoshash: iterated bit-flip hashing and its measurement harness"};
  app.require_subcommand(1);

  std::string output_path;
  app.add_option("--output,-o", output_path, "Write output to this file instead of stdout");

  // hash FILE...
  auto* cmd_hash = app.add_subcommand("hash", "Hash files ('-' reads stdin, raw bytes only)");
  cmd_hash->fallthrough();
  HashOpts hash_opts;
  std::vector<std::string> hash_files;
  hash_opts.attach(cmd_hash);
  cmd_hash->add_option("files", hash_files, "Input files")->required();

  // avalanche
  auto* cmd_aval = app.add_subcommand("avalanche", "One-bit diffusion experiment");
  cmd_aval->fallthrough();
  HashOpts aval_opts;
  aval_opts.attach(cmd_aval, /*with_encoding=*/false);
  std::uint64_t aval_trials = 1000;
  std::size_t aval_bits = 1000;
  std::uint64_t aval_seed = 1;
  std::size_t aval_threads = 1;
  std::string aval_format = "text";
  cmd_aval->add_option("--trials", aval_trials, "Number of trials")->capture_default_str();
  cmd_aval->add_option("--msg-bits", aval_bits, "Random message length in bits")
      ->capture_default_str();
  cmd_aval->add_option("--seed", aval_seed, "Experiment seed")->capture_default_str();
  cmd_aval->add_option("--threads", aval_threads, "Worker threads (never changes the output)")
      ->capture_default_str();
  cmd_aval->add_option("--format", aval_format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  // uniformity
  auto* cmd_unif = app.add_subcommand("uniformity", "Digest hex-symbol distribution");
  cmd_unif->fallthrough();
  HashOpts unif_opts;
  unif_opts.attach(cmd_unif, /*with_encoding=*/false);
  std::uint64_t unif_trials = 10000;
  std::size_t unif_bits = 1000;
  std::uint64_t unif_seed = 1;
  std::size_t unif_threads = 1;
  std::string unif_format = "text";
  cmd_unif->add_option("--trials", unif_trials, "Number of digests")->capture_default_str();
  cmd_unif->add_option("--msg-bits", unif_bits, "Random message length in bits")
      ->capture_default_str();
  cmd_unif->add_option("--seed", unif_seed, "Experiment seed")->capture_default_str();
  cmd_unif->add_option("--threads", unif_threads, "Worker threads (never changes the output)")
      ->capture_default_str();
  cmd_unif->add_option("--format", unif_format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  // bench
  auto* cmd_bench = app.add_subcommand("bench", "Wall-clock scaling over doubling sizes");
  cmd_bench->fallthrough();
  HashOpts bench_opts;
  bench_opts.attach(cmd_bench, /*with_encoding=*/false);
  std::size_t bench_min = 8192;
  std::size_t bench_max = 1048576;
  std::size_t bench_reps = 5;
  std::uint64_t bench_seed = 1;
  std::string bench_format = "text";
  cmd_bench->add_option("--min-bits", bench_min, "Smallest message size in bits (>= 4096)")
      ->capture_default_str();
  cmd_bench->add_option("--max-bits", bench_max, "Largest message size in bits")
      ->capture_default_str();
  cmd_bench->add_option("--reps", bench_reps, "Repetitions per size (median taken)")
      ->capture_default_str();
  cmd_bench->add_option("--seed", bench_seed, "Message generation seed")->capture_default_str();
  cmd_bench->add_option("--format", bench_format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  // battery FILE [FILE2]
  auto* cmd_batt = app.add_subcommand(
      "battery", "Seven-case digest battery over a media file (and optional second media)");
  cmd_batt->fallthrough();
  HashOpts batt_opts;
  batt_opts.attach(cmd_batt);
  std::vector<std::string> batt_files;
  std::string batt_format = "text";
  cmd_batt->add_option("files", batt_files, "Media file, optionally a second one")
      ->expected(1, 2)
      ->required();
  cmd_batt->add_option("--format", batt_format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  // trace FILE
  auto* cmd_trace = app.add_subcommand(
      "trace", "Divergence trace between a message and a one-bit variant (CSV)");
  cmd_trace->fallthrough();
  HashOpts trace_opts;
  trace_opts.attach(cmd_trace);
  std::string trace_file;
  std::size_t trace_flip = 0;
  std::size_t trace_steps = 64;
  std::size_t trace_depth = 15;
  cmd_trace->add_option("file", trace_file, "Input file ('-' reads stdin)")->required();
  cmd_trace->add_option("--flip-bit", trace_flip, "Encoded message bit to flip in the variant")
      ->capture_default_str();
  cmd_trace->add_option("--steps", trace_steps, "Steps to trace")->capture_default_str();
  cmd_trace->add_option("--depth", trace_depth, "Strategy comparison depth")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*cmd_hash) {
      chaoshash::HashParams params = hash_opts.params();
      params.validate();
      std::string out;
      for (const std::string& name : hash_files) {
        if (name == "-" && params.encoding != chaoshash::Encoding::kRaw8)
          throw chaoshash::PreconditionError("stdin hashing is raw-byte mode only");
        chaoshash::Digest digest = chaoshash::hash(read_file_or_stdin(name), params);
        out += digest.hex + "  " + name + "\n";
      }
      write_output(output_path, out);
    } else if (*cmd_aval) {
      chaoshash::AvalancheReport report = chaoshash::avalanche_experiment(
          aval_trials, aval_bits, aval_opts.params(), aval_seed, aval_threads);
      write_output(output_path, render(report, aval_format));
    } else if (*cmd_unif) {
      chaoshash::UniformityReport report = chaoshash::uniformity_experiment(
          unif_trials, unif_bits, unif_opts.params(), unif_seed, unif_threads);
      write_output(output_path, render(report, unif_format));
    } else if (*cmd_bench) {
      std::vector<std::size_t> sizes;
      for (std::size_t s = bench_min; s <= bench_max; s *= 2) sizes.push_back(s);
      chaoshash::BenchReport report =
          chaoshash::bench_linear(sizes, bench_opts.params(), bench_reps, bench_seed);
      write_output(output_path, render(report, bench_format));
    } else if (*cmd_batt) {
      chaoshash::HashParams params = batt_opts.params();
      std::vector<std::uint8_t> media = read_file_or_stdin(batt_files[0]);
      std::vector<std::uint8_t> media2;
      if (batt_files.size() > 1) {
        media2 = read_file_or_stdin(batt_files[1]);
      } else {
        media2.assign(media.rbegin(), media.rend());
      }
      chaoshash::BatteryReport report =
          chaoshash::case_battery(battery_cases(media, media2, params));
      write_output(output_path, render(report, batt_format));
    } else if (*cmd_trace) {
      chaoshash::HashParams params = trace_opts.params();
      params.validate();
      if (trace_file == "-" && params.encoding != chaoshash::Encoding::kRaw8)
        throw chaoshash::PreconditionError("stdin hashing is raw-byte mode only");
      chaoshash::BitString encoded =
          chaoshash::encode_message(read_file_or_stdin(trace_file), params.encoding);
      if (encoded.empty()) throw chaoshash::PreconditionError("trace: input is empty");
      if (trace_flip >= encoded.size())
        throw chaoshash::PreconditionError("trace: --flip-bit is past the end of the message");
      chaoshash::BitString variant = encoded;
      variant.flip_bit(trace_flip);
      chaoshash::NormalizedInput nx = chaoshash::normalize_bits(encoded, params);
      chaoshash::NormalizedInput ny = chaoshash::normalize_bits(variant, params);
      chaoshash::Point x(chaoshash::build_strategy(chaoshash::build_u(nx.d), params), nx.x0);
      chaoshash::Point y(chaoshash::build_strategy(chaoshash::build_u(ny.d), params), ny.x0);
      std::vector<chaoshash::DistanceValue> rows =
          chaoshash::divergence_trace(x, y, trace_steps, trace_depth);
      write_output(output_path, chaoshash::trace_csv(rows));
    }
  } catch (const chaoshash::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const chaoshash::DepthError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const chaoshash::EncodingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const chaoshash::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const chaoshash::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
