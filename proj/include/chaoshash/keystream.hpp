#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chaoshash/bitstring.hpp"
#include "chaoshash/error.hpp"
#include "chaoshash/preprocess.hpp"

namespace chaoshash {

/// The byte stream u extracted from a preprocessed message: one term per
/// 8-bit block and rotation pass, each in [0, 255].
struct UStream {
  std::vector<std::uint8_t> terms;

  std::size_t size() const noexcept { return terms.size(); }
};

/// A finite strategy: the sequence of cell indices an iteration schedule
/// visits.  Every term lies in [0, n).
class Strategy {
 public:
  Strategy(std::vector<std::uint16_t> terms, std::size_t n) : terms_(std::move(terms)), n_(n) {
    if (n_ == 0) throw PreconditionError("Strategy: n must be positive");
    for (std::uint16_t t : terms_) {
      if (t >= n_) throw PreconditionError("Strategy: term out of range [0, n)");
    }
  }

  static Strategy empty(std::size_t n) { return Strategy({}, n); }

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_empty() const noexcept { return terms_.empty(); }

  std::uint16_t term(std::size_t index) const {
    if (index >= terms_.size()) throw DimensionError("Strategy::term: index out of range");
    return terms_[index];
  }

  const std::vector<std::uint16_t>& terms() const noexcept { return terms_; }

  /// First term.  The strategy must be non-empty.
  std::uint16_t head() const {
    if (terms_.empty()) throw ExhaustedStrategyError("Strategy::head: no terms left");
    return terms_.front();
  }

  /// Everything after the first term.  The strategy must be non-empty.
  Strategy tail() const {
    if (terms_.empty()) throw ExhaustedStrategyError("Strategy::tail: no terms left");
    return Strategy(std::vector<std::uint16_t>(terms_.begin() + 1, terms_.end()), n_);
  }

  friend bool operator==(const Strategy& a, const Strategy& b) = default;

 private:
  std::vector<std::uint16_t> terms_;
  std::size_t n_;
};

/// Reads the u stream out of a preprocessed message `d`: eight passes
/// p = 0..7, each reading consecutive 8-bit blocks (most significant bit
/// first) of `d` rotated left by p.  |u| = |d| follows, since each pass
/// contributes |d| / 8 terms.  |d| must be a positive multiple of 8.
inline UStream build_u(const BitString& d) {
  if (d.empty() || d.size() % 8 != 0)
    throw DimensionError("build_u: length must be a positive multiple of 8");
  const std::size_t len = d.size();
  const std::vector<std::uint8_t>& bits = d.data();
  UStream u;
  u.terms.reserve(len);
  for (std::size_t pass = 0; pass < 8; ++pass) {
    for (std::size_t block = 0; block < len; block += 8) {
      unsigned value = 0;
      for (std::size_t j = 0; j < 8; ++j) {
        std::size_t index = block + j + pass;  // < len + 8
        if (index >= len) index -= len;
        value = (value << 1) | bits[index];
      }
      u.terms.push_back(static_cast<std::uint8_t>(value));
    }
  }
  return u;
}

/// Derives the iteration strategy from the u stream.  The opening term is
/// the key reduced mod n when one is given, else the first u term reduced
/// mod n; each later term folds in the next u term, twice the previous
/// term and the step counter:
///
///   S[0] = key mod n              (or u[0] mod n without a key)
///   S[t] = (u[t] + 2 S[t-1] + t) mod n.
///
/// One strategy term is produced per u term, the opening term included,
/// so |S| = |u|.
inline Strategy build_strategy(const UStream& u, const HashParams& params) {
  params.validate();
  if (u.terms.empty()) throw PreconditionError("build_strategy: u stream must be non-empty");
  const std::uint64_t n = params.digest_bits;
  std::vector<std::uint16_t> terms;
  terms.reserve(u.size());
  std::uint64_t s = (params.key ? *params.key : u.terms[0]) % n;
  terms.push_back(static_cast<std::uint16_t>(s));
  for (std::size_t t = 1; t < u.size(); ++t) {
    s = (u.terms[t] + 2 * s + t) % n;
    terms.push_back(static_cast<std::uint16_t>(s));
  }
  return Strategy(std::move(terms), n);
}

}  // namespace chaoshash
