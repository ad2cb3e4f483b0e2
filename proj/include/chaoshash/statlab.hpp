#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "chaoshash/bitstring.hpp"
#include "chaoshash/error.hpp"
#include "chaoshash/hasher.hpp"
#include "chaoshash/preprocess.hpp"
#include "chaoshash/rng.hpp"

namespace chaoshash {

/// 0.999 quantile of the chi-squared distribution with 15 degrees of
/// freedom; the acceptance threshold for digest symbol uniformity.
inline constexpr double kChiSquared999Df15 = 37.697;

/// Aggregates of a set of per-trial flipped-bit counts.
struct BStats {
  std::uint32_t B_min = 0;
  std::uint32_t B_max = 0;
  double B_bar = 0.0;  // mean flipped bits
  double P = 0.0;      // mean flipped fraction, B_bar / n
  // Sample standard deviation (N - 1 denominator) and its fraction-of-n
  // counterpart; absent when there is only one value.
  std::optional<double> delta_B;
  std::optional<double> delta_P;
};

/// Computes the aggregate statistics over per-trial distances.  Every
/// value must lie in [0, n]; the input must be non-empty.
inline BStats stats_from_b(std::span<const std::uint32_t> b, std::size_t n) {
  if (b.empty()) throw PreconditionError("stats_from_b: no values");
  for (std::uint32_t v : b) {
    if (v > n) throw PreconditionError("stats_from_b: value exceeds digest length");
  }
  BStats out;
  out.B_min = *std::min_element(b.begin(), b.end());
  out.B_max = *std::max_element(b.begin(), b.end());
  const double sum = std::accumulate(b.begin(), b.end(), 0.0);
  const double count = static_cast<double>(b.size());
  out.B_bar = sum / count;
  out.P = out.B_bar / static_cast<double>(n);
  if (b.size() >= 2) {
    double sq = 0.0;
    for (std::uint32_t v : b) {
      const double dev = static_cast<double>(v) - out.B_bar;
      sq += dev * dev;
    }
    const double var = sq / (count - 1.0);
    out.delta_B = std::sqrt(var);
    out.delta_P = *out.delta_B / static_cast<double>(n);
  }
  return out;
}

/// Result of an avalanche experiment.
struct AvalancheReport {
  std::uint64_t trials = 0;
  std::size_t message_bits = 0;
  std::size_t digest_bits = 0;
  std::vector<std::uint32_t> B_values;  // per-trial flipped digest bits, trial order
  BStats stats;
  std::map<std::uint32_t, std::uint64_t> histogram;  // distance -> count
  std::uint64_t seed = 0;
};

/// Smallest distance achieving the histogram's maximum count.
inline std::uint32_t histogram_mode(const AvalancheReport& report) {
  if (report.histogram.empty()) throw PreconditionError("histogram_mode: empty histogram");
  std::uint32_t mode = report.histogram.begin()->first;
  std::uint64_t best = report.histogram.begin()->second;
  for (const auto& [distance, count] : report.histogram) {
    if (count > best) {
      best = count;
      mode = distance;
    }
  }
  return mode;
}

namespace detail {

/// Runs worker(begin, end) over a partition of [0, total) on `threads`
/// OS threads.  Partition boundaries depend only on (total, threads);
/// workers write to disjoint, preallocated slots, so results cannot
/// depend on scheduling.  The first worker exception, in partition
/// order, is rethrown.
template <typename Worker>
void run_partitioned(std::size_t total, std::size_t threads, Worker&& worker) {
  if (threads == 0) throw PreconditionError("run_partitioned: threads must be positive");
  if (threads == 1 || total <= 1) {
    worker(std::size_t{0}, total);
    return;
  }
  threads = std::min(threads, total);
  const std::size_t chunk = (total + threads - 1) / threads;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&worker, &errors, t, begin, end] {
      try {
        worker(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace detail

/// Avalanche experiment: per trial, draw a random message, hash it, flip
/// one uniformly chosen message bit, hash again, and record how many
/// digest bits changed.  Each trial owns a generator seeded from (seed,
/// trial index), so the report is byte-identical for any thread count.
inline AvalancheReport avalanche_experiment(std::uint64_t trials, std::size_t message_bits,
                                            const HashParams& params, std::uint64_t seed,
                                            std::size_t threads = 1) {
  params.validate();
  if (trials == 0) throw PreconditionError("avalanche_experiment: trials must be positive");
  if (message_bits == 0)
    throw PreconditionError("avalanche_experiment: message_bits must be positive");
  AvalancheReport report;
  report.trials = trials;
  report.message_bits = message_bits;
  report.digest_bits = params.digest_bits;
  report.seed = seed;
  report.B_values.assign(trials, 0);
  detail::run_partitioned(trials, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      SplitMix64 rng(mix64(seed, i));
      BitString message = random_bits(rng, message_bits);
      const std::size_t flip = rng.below(message_bits);
      const Digest before = hash_bits(message, params);
      message.flip_bit(flip);
      const Digest after = hash_bits(message, params);
      report.B_values[i] = static_cast<std::uint32_t>(hamming(before.config, after.config));
    }
  });
  report.stats = stats_from_b(report.B_values, params.digest_bits);
  for (std::uint32_t b : report.B_values) ++report.histogram[b];
  return report;
}

/// Pooled hex-symbol counts over a set of digests, with the chi-squared
/// statistic against the uniform expectation.
struct UniformityReport {
  std::uint64_t digests = 0;
  std::size_t message_bits = 0;  // 0 when built from externally supplied digests
  std::size_t digest_bits = 0;   // likewise
  std::array<std::uint64_t, 16> counts{};
  double chi_squared = 0.0;
  std::uint64_t seed = 0;
};

/// Counts hex symbols pooled over all digests and computes
/// chi-squared = sum (observed - expected)^2 / expected, expected =
/// total/16.  Requires at least one digest; accepts upper- or lowercase.
inline UniformityReport nibble_uniformity(const std::vector<std::string>& hex_digests) {
  if (hex_digests.empty()) throw PreconditionError("nibble_uniformity: no digests");
  UniformityReport report;
  report.digests = hex_digests.size();
  for (const std::string& hex : hex_digests) {
    for (char c : hex) {
      unsigned v = 0;
      if (c >= '0' && c <= '9') {
        v = static_cast<unsigned>(c - '0');
      } else if (c >= 'A' && c <= 'F') {
        v = static_cast<unsigned>(c - 'A') + 10;
      } else if (c >= 'a' && c <= 'f') {
        v = static_cast<unsigned>(c - 'a') + 10;
      } else {
        throw ParseError(std::string("nibble_uniformity: invalid hex digit '") + c + "'");
      }
      ++report.counts[v];
    }
  }
  const double total = static_cast<double>(
      std::accumulate(report.counts.begin(), report.counts.end(), std::uint64_t{0}));
  const double expected = total / 16.0;
  double chi = 0.0;
  for (std::uint64_t observed : report.counts) {
    const double dev = static_cast<double>(observed) - expected;
    chi += dev * dev / expected;
  }
  report.chi_squared = chi;
  return report;
}

/// Hashes `trials` random messages and reports the pooled symbol counts
/// of their digests.  Deterministic for a fixed seed and any thread
/// count.
inline UniformityReport uniformity_experiment(std::uint64_t trials, std::size_t message_bits,
                                              const HashParams& params, std::uint64_t seed,
                                              std::size_t threads = 1) {
  params.validate();
  if (trials == 0) throw PreconditionError("uniformity_experiment: trials must be positive");
  if (message_bits == 0)
    throw PreconditionError("uniformity_experiment: message_bits must be positive");
  std::vector<std::string> digests(trials);
  detail::run_partitioned(trials, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      SplitMix64 rng(mix64(seed, i));
      BitString message = random_bits(rng, message_bits);
      digests[i] = hash_bits(message, params).hex;
    }
  });
  UniformityReport report = nibble_uniformity(digests);
  report.message_bits = message_bits;
  report.digest_bits = params.digest_bits;
  report.seed = seed;
  return report;
}

/// Exact iteration count for a message of `l` bits and the proven upper
/// bound, without hashing anything.
struct IterationCount {
  std::size_t steps = 0;  // |d|: one negation step per carrier bit
  std::size_t bound = 0;  // 2l + 2*ceil(log2(l+1)) + 4 + (granularity - 1)
  std::size_t slack = 0;  // bound - steps
};

/// ceil(log2(value)) for value >= 1.
inline std::size_t ceil_log2(std::size_t value) {
  if (value == 0) throw PreconditionError("ceil_log2: value must be positive");
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < value) ++bits;
  return bits;
}

/// Traces the preprocessing pipeline symbolically for an l-bit message
/// and an n-bit digest: marking takes l to l + 2 + bitwidth(l + 1),
/// mirroring to twice that minus one, expansion to the next positive
/// multiple of the block granularity.  The result is the exact number of
/// iteration steps.  Also evaluates the proven bound
///
///   steps <= 2 l + 2 ceil(log2(l + 1)) + 4 + (granularity - 1)
///
/// (with granularity 512 the tail collapses to the familiar "+ 515")
/// and returns the slack; the bound failing would be a library defect,
/// reported as a plain Error.
inline IterationCount iteration_count(std::size_t l, std::size_t n) {
  HashParams probe;
  probe.digest_bits = n;
  probe.validate();
  std::size_t width = 0;
  for (std::size_t v = l + 1; v != 0; v >>= 1) ++width;
  const std::size_t marked = l + 2 + width;
  const std::size_t mirrored = 2 * marked - 1;
  const std::size_t g = block_granularity(n);
  IterationCount out;
  out.steps = ((mirrored + g - 1) / g) * g;
  out.bound = 2 * l + 2 * ceil_log2(l + 1) + 4 + (g - 1);
  if (out.steps > out.bound)
    throw Error("iteration_count: proven bound violated (library defect)");
  out.slack = out.bound - out.steps;
  return out;
}

/// One benchmarked size.
struct BenchRow {
  std::size_t input_bits = 0;
  std::size_t iteration_count = 0;
  double wall_time = 0.0;  // seconds per hash, median over repetitions
};

/// Wall-clock scaling measurement over a set of message sizes.
struct BenchReport {
  std::vector<BenchRow> rows;
  double slope = 0.0;      // fitted seconds per input bit
  double linearity = 0.0;  // R^2 of the linear fit (1 when under 3 distinct sizes)
  std::vector<double> doubling_ratios;  // wall_time ratio for consecutive exact doublings
  std::uint64_t seed = 0;
};

/// Times end-to-end hashing for each size (non-descending, each at least
/// 4096 bits) and fits wall time against size.  Repetitions (>= 3) are
/// medianed.  Small sizes are batched so that each timed region is long
/// enough for the clock; timing numbers are of course not reproducible,
/// everything else is.
inline BenchReport bench_linear(const std::vector<std::size_t>& sizes, const HashParams& params,
                                std::size_t repetitions, std::uint64_t seed) {
  params.validate();
  if (sizes.empty()) throw PreconditionError("bench_linear: no sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 4096)
      throw PreconditionError("bench_linear: sizes must be at least 4096 bits (512 bytes)");
    if (i > 0 && sizes[i] < sizes[i - 1])
      throw PreconditionError("bench_linear: sizes must be non-descending");
  }
  if (repetitions < 3) throw PreconditionError("bench_linear: need at least 3 repetitions");

  using Clock = std::chrono::steady_clock;
  BenchReport report;
  report.seed = seed;
  for (std::size_t index = 0; index < sizes.size(); ++index) {
    const std::size_t l = sizes[index];
    SplitMix64 rng(mix64(seed, index));
    const BitString message = random_bits(rng, l);
    // Batch so each timed region covers at least ~2^21 message bits;
    // one warmup run is discarded.
    const std::size_t batch = std::max<std::size_t>(1, (std::size_t{1} << 21) / l);
    DetailedHash detail = hash_bits_detailed(message, params);
    std::vector<double> samples;
    samples.reserve(repetitions);
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
      const auto start = Clock::now();
      for (std::size_t b = 0; b < batch; ++b) {
        const Digest digest = hash_bits(message, params);
        if (digest.config.size() != params.digest_bits)
          throw Error("bench_linear: digest size mismatch (library defect)");
      }
      const std::chrono::duration<double> elapsed = Clock::now() - start;
      samples.push_back(elapsed.count() / static_cast<double>(batch));
    }
    std::sort(samples.begin(), samples.end());
    BenchRow row;
    row.input_bits = l;
    row.iteration_count = detail.steps;
    row.wall_time = samples[samples.size() / 2];
    report.rows.push_back(row);
  }

  // Least-squares fit wall_time = intercept + slope * input_bits.
  const std::size_t count = report.rows.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (const BenchRow& row : report.rows) {
    mean_x += static_cast<double>(row.input_bits);
    mean_y += row.wall_time;
  }
  mean_x /= static_cast<double>(count);
  mean_y /= static_cast<double>(count);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const BenchRow& row : report.rows) {
    const double dx = static_cast<double>(row.input_bits) - mean_x;
    const double dy = row.wall_time - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx > 0.0) {
    report.slope = sxy / sxx;
    report.linearity = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  } else {
    report.slope = 0.0;
    report.linearity = 1.0;
  }
  for (std::size_t i = 0; i + 1 < count; ++i) {
    if (report.rows[i + 1].input_bits == 2 * report.rows[i].input_bits)
      report.doubling_ratios.push_back(report.rows[i + 1].wall_time / report.rows[i].wall_time);
  }
  return report;
}

/// One input of a digest battery.
struct BatteryInput {
  std::string label;
  std::vector<std::uint8_t> message;
  HashParams params;
};

/// One battery result row: either a digest or an error message.
struct BatteryRow {
  std::string label;
  std::string hex;    // empty on error
  std::string error;  // empty on success
};

/// Battery output: per-input rows plus pairwise Hamming distances
/// between every pair of successful digests of equal length.
struct BatteryReport {
  struct Pair {
    std::size_t first = 0;   // row indices
    std::size_t second = 0;
    std::size_t distance = 0;
  };
  std::vector<BatteryRow> rows;
  std::vector<Pair> pairs;
};

/// Hashes each labeled input and tabulates digests and their pairwise
/// distances.  Per-input failures (encoding errors, bad parameters) are
/// reported in the row instead of aborting the battery.
inline BatteryReport case_battery(const std::vector<BatteryInput>& inputs) {
  BatteryReport report;
  std::vector<std::optional<Configuration>> configs;
  for (const BatteryInput& input : inputs) {
    BatteryRow row;
    row.label = input.label;
    try {
      Digest digest = hash(input.message, input.params);
      row.hex = digest.hex;
      configs.emplace_back(std::move(digest.config));
    } catch (const Error& e) {
      row.error = e.what();
      configs.emplace_back(std::nullopt);
    }
    report.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < configs.size(); ++i) {
    for (std::size_t j = i + 1; j < configs.size(); ++j) {
      if (configs[i] && configs[j] && configs[i]->size() == configs[j]->size())
        report.pairs.push_back({i, j, hamming(*configs[i], *configs[j])});
    }
  }
  return report;
}

}  // namespace chaoshash
