#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chaoshash/bitstring.hpp"
#include "chaoshash/dynamics.hpp"
#include "chaoshash/error.hpp"
#include "chaoshash/keystream.hpp"

namespace chaoshash {

/// Configuration part of the metric: plain Hamming distance.
inline std::size_t config_distance(const Configuration& a, const Configuration& b) {
  return hamming(a, b);
}

namespace detail {

inline double strategy_distance_span(std::span<const std::uint16_t> a,
                                     std::span<const std::uint16_t> b, std::size_t n,
                                     std::size_t depth) {
  double sum = 0.0;
  double weight = 1.0;
  for (std::size_t i = 0; i < depth; ++i) {
    weight /= 10.0;
    const double diff = a[i] >= b[i] ? a[i] - b[i] : b[i] - a[i];
    sum += diff * weight;
  }
  return (9.0 / static_cast<double>(n)) * sum;
}

}  // namespace detail

/// Strategy part of the metric, truncated at `depth` terms:
///
///   (9 / n) * sum over i = 1..depth of |s[i-1] - t[i-1]| / 10^i.
///
/// Each summand is below 10^-(i-1), so the total is strictly below 1 and
/// the truncation error of ignoring terms past `depth` is below
/// 10^-depth.  Both strategies must hold at least `depth` terms.
///
/// Reading the digits of the result: if the first k compared terms are
/// equal, the result is strictly below 10^-k.  The converse — the result
/// dropping below 10^-k forcing the first k terms to agree — additionally
/// needs the per-term factor 9/n to be at least 1, i.e. n <= 9; for wider
/// systems a small disagreement early on can hide below the threshold.
inline double strategy_distance(const Strategy& s, const Strategy& t, std::size_t depth) {
  if (s.n() != t.n())
    throw DimensionError("strategy_distance: strategies have different cell counts");
  if (s.size() < depth || t.size() < depth)
    throw DepthError("strategy_distance: strategies shorter than the comparison depth");
  return detail::strategy_distance_span(std::span(s.terms()).first(depth),
                                        std::span(t.terms()).first(depth), s.n(), depth);
}

/// Default strategy comparison depth: the truncation error is below
/// 10^-15, under double-precision relevance at these magnitudes.
inline constexpr std::size_t kDefaultDepth = 15;

/// A computed distance, kept in parts.
struct DistanceValue {
  std::size_t config_part = 0;      // d_e: Hamming distance
  double strategy_part = 0.0;       // d_s: truncated strategy distance
  double total = 0.0;               // d = d_e + d_s
  std::size_t truncation_depth = 0; // terms compared for d_s
};

/// The full metric: Hamming distance between configurations plus the
/// truncated strategy distance.  Since the strategy part is strictly
/// below 1, the integer part of the total is exactly the Hamming
/// distance, and the total is >= 1 precisely when the configurations
/// differ somewhere.
inline DistanceValue distance(const Point& x, const Point& y, std::size_t depth = kDefaultDepth) {
  DistanceValue value;
  value.config_part = config_distance(x.config(), y.config());
  value.strategy_part = strategy_distance(x.strategy(), y.strategy(), depth);
  value.total = static_cast<double>(value.config_part) + value.strategy_part;
  value.truncation_depth = depth;
  return value;
}

/// Runs two points side by side for `steps` steps and records the
/// distance before each step and after the last, giving steps + 1 rows
/// (the row index is the step number).  The strategy part at row k
/// compares the strategies still to be consumed, truncated at `depth`
/// terms, so both strategies must hold at least steps + depth terms.
inline std::vector<DistanceValue> divergence_trace(const Point& x, const Point& y,
                                                   std::size_t steps,
                                                   std::size_t depth = kDefaultDepth) {
  if (x.config().size() != y.config().size())
    throw DimensionError("divergence_trace: points have different cell counts");
  if (x.strategy().size() < steps + depth || y.strategy().size() < steps + depth)
    throw DepthError("divergence_trace: strategies shorter than steps + depth");
  const std::size_t n = x.config().size();
  Configuration cx = x.config();
  Configuration cy = y.config();
  std::span<const std::uint16_t> sx(x.strategy().terms());
  std::span<const std::uint16_t> sy(y.strategy().terms());
  std::vector<DistanceValue> rows;
  rows.reserve(steps + 1);
  for (std::size_t k = 0;; ++k) {
    DistanceValue row;
    row.config_part = config_distance(cx, cy);
    row.strategy_part =
        detail::strategy_distance_span(sx.subspan(k, depth), sy.subspan(k, depth), n, depth);
    row.total = static_cast<double>(row.config_part) + row.strategy_part;
    row.truncation_depth = depth;
    rows.push_back(row);
    if (k == steps) break;
    cx.flip_bit(sx[k]);
    cy.flip_bit(sy[k]);
  }
  return rows;
}

/// Renders trace rows as CSV with header "step,d_e,d_s,d"; the step
/// column is the row index.
inline std::string trace_csv(const std::vector<DistanceValue>& rows) {
  std::string out = "step,d_e,d_s,d\n";
  char buf[128];
  for (std::size_t step = 0; step < rows.size(); ++step) {
    const DistanceValue& row = rows[step];
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g\n", step, row.config_part,
                  row.strategy_part, row.total);
    out += buf;
  }
  return out;
}

/// Searches for the step at which two trajectories are at distance >= 1,
/// i.e. their configurations differ in at least one cell (the strategy
/// part of the metric never reaches 1).  Checks the starting
/// configurations first (step 0), then steps both points together up to
/// `horizon` steps or until either strategy runs out.  Returns the step
/// count on success.
inline std::optional<std::size_t> expansivity_witness(const Point& x, const Point& y,
                                                      std::size_t horizon) {
  if (x.config().size() != y.config().size())
    throw DimensionError("expansivity_witness: points have different cell counts");
  Configuration cx = x.config();
  Configuration cy = y.config();
  std::span<const std::uint16_t> sx(x.strategy().terms());
  std::span<const std::uint16_t> sy(y.strategy().terms());
  for (std::size_t k = 0;; ++k) {
    if (cx != cy) return k;
    if (k == horizon || k >= sx.size() || k >= sy.size()) return std::nullopt;
    cx.flip_bit(sx[k]);
    cy.flip_bit(sy[k]);
  }
}

/// Exponent of trajectory separation for the n-cell negation system,
/// provided as a reference constant for experiment reports.
inline double lyapunov_reference(std::size_t n) {
  if (n == 0) throw PreconditionError("lyapunov_reference: n must be positive");
  return std::log(static_cast<double>(n));
}

}  // namespace chaoshash
