#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "chaoshash/bitstring.hpp"
#include "chaoshash/error.hpp"
#include "chaoshash/keystream.hpp"

namespace chaoshash {

/// Negates cell `index` of a configuration, leaving every other cell
/// unchanged.
inline Configuration f_neg(std::size_t index, const Configuration& x) {
  if (index >= x.size()) throw DimensionError("f_neg: cell index out of range");
  Configuration out = x;
  out.flip_bit(index);
  return out;
}

/// A point of the dynamical system: the strategy still to be consumed,
/// paired with the current configuration.
class Point {
 public:
  Point(Strategy strategy, Configuration config)
      : strategy_(std::move(strategy)), config_(std::move(config)) {
    if (strategy_.n() != config_.size())
      throw DimensionError("Point: strategy cell count must match configuration length");
  }

  const Strategy& strategy() const noexcept { return strategy_; }
  const Configuration& config() const noexcept { return config_; }

 private:
  Strategy strategy_;
  Configuration config_;
};

/// One step of the system: negates the cell named by the first strategy
/// term and discards that term.  The strategy must be non-empty.
inline Point g_neg_step(const Point& p) {
  if (p.strategy().is_empty())
    throw ExhaustedStrategyError("g_neg_step: strategy has no terms left");
  Configuration next = f_neg(p.strategy().head(), p.config());
  return Point(p.strategy().tail(), std::move(next));
}

/// Runs the system until the strategy is exhausted and returns the final
/// configuration.  Consumes one term per step, the opening term included.
inline Configuration iterate(const Point& p) {
  Configuration x = p.config();
  for (std::uint16_t t : p.strategy().terms()) x.flip_bit(t);
  return x;
}

/// A finite strategy taking configuration `from` to configuration `to`:
/// the differing cell indices in increasing order.  Its length is the
/// Hamming distance, hence at most n; equal configurations yield the
/// empty strategy.
inline Strategy reach_strategy(const Configuration& from, const Configuration& to) {
  if (from.size() != to.size())
    throw DimensionError("reach_strategy: configurations have different lengths");
  std::vector<std::uint16_t> terms;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from.bit(i) != to.bit(i)) terms.push_back(static_cast<std::uint16_t>(i));
  }
  return Strategy(std::move(terms), from.size());
}

}  // namespace chaoshash
