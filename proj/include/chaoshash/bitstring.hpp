#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chaoshash/error.hpp"

namespace chaoshash {

/// Ordered sequence of bits of arbitrary length.  Index 0 is the leftmost
/// (most significant) bit of the canonical text rendering.  Bits are stored
/// one per byte: at these sizes the simplicity and O(1) single-bit access
/// are worth more than the 8x memory.
class BitString {
 public:
  BitString() = default;

  explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_) {
      if (b > 1) throw PreconditionError("BitString: bit values must be 0 or 1");
    }
  }

  /// All-zero string of the given length.
  static BitString zeros(std::size_t count) {
    BitString s;
    s.bits_.assign(count, 0);
    return s;
  }

  /// Parses the canonical text rendering: '0'/'1' characters, any
  /// whitespace ignored.  Anything else is rejected.
  static BitString parse(std::string_view text) {
    BitString s;
    s.bits_.reserve(text.size());
    for (char c : text) {
      if (c == '0' || c == '1') {
        s.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        continue;
      } else {
        throw ParseError(std::string("BitString::parse: invalid character '") + c + "'");
      }
    }
    return s;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  /// Value (0 or 1) of the bit at `index`, counted from the left.
  std::uint8_t bit(std::size_t index) const {
    if (index >= bits_.size()) throw DimensionError("BitString::bit: index out of range");
    return bits_[index];
  }

  void set_bit(std::size_t index, std::uint8_t value) {
    if (index >= bits_.size()) throw DimensionError("BitString::set_bit: index out of range");
    if (value > 1) throw PreconditionError("BitString::set_bit: bit values must be 0 or 1");
    bits_[index] = value;
  }

  void flip_bit(std::size_t index) {
    if (index >= bits_.size()) throw DimensionError("BitString::flip_bit: index out of range");
    bits_[index] ^= 1u;
  }

  void append_bit(std::uint8_t value) {
    if (value > 1) throw PreconditionError("BitString::append_bit: bit values must be 0 or 1");
    bits_.push_back(value);
  }

  void append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
  }

  /// Canonical text rendering: bits in order, a single space between each
  /// group of eight.  The final group may be shorter.
  std::string to_text() const {
    std::string out;
    out.reserve(bits_.size() + bits_.size() / 8);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (i != 0 && i % 8 == 0) out.push_back(' ');
      out.push_back(static_cast<char>('0' + bits_[i]));
    }
    return out;
  }

  const std::vector<std::uint8_t>& data() const noexcept { return bits_; }
  std::vector<std::uint8_t>& data() noexcept { return bits_; }

  friend bool operator==(const BitString& a, const BitString& b) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// A system configuration: a non-empty bit string whose length is the
/// number of cells.  Digest-specific constraints (length a positive
/// multiple of 4, at most 256) are enforced where digests are produced,
/// not here, so that small illustrative systems remain expressible.
class Configuration {
 public:
  explicit Configuration(BitString bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw PreconditionError("Configuration: must contain at least one cell");
  }

  static Configuration zeros(std::size_t n) { return Configuration(BitString::zeros(n)); }

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t bit(std::size_t index) const { return bits_.bit(index); }
  void flip_bit(std::size_t index) { bits_.flip_bit(index); }

  const BitString& bits() const noexcept { return bits_; }

  friend bool operator==(const Configuration& a, const Configuration& b) = default;

 private:
  BitString bits_;
};

/// Left rotation by `count` positions: the bit at index `count` becomes
/// index 0.  Rotation of the empty string is the empty string.
inline BitString rotate_left(const BitString& s, std::size_t count) {
  if (s.empty()) return s;
  const std::size_t len = s.size();
  const std::size_t k = count % len;
  std::vector<std::uint8_t> out;
  out.reserve(len);
  out.insert(out.end(), s.data().begin() + static_cast<std::ptrdiff_t>(k), s.data().end());
  out.insert(out.end(), s.data().begin(), s.data().begin() + static_cast<std::ptrdiff_t>(k));
  return BitString(std::move(out));
}

/// Bit order reversal.
inline BitString reverse(const BitString& s) {
  std::vector<std::uint8_t> out(s.data().rbegin(), s.data().rend());
  return BitString(std::move(out));
}

/// Number of positions at which two equal-length configurations differ.
inline std::size_t hamming(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size())
    throw DimensionError("hamming: configurations have different lengths");
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += a.bit(i) != b.bit(i);
  return count;
}

/// Splits `s` into consecutive n-bit blocks and XORs them together.
/// The length of `s` must be a positive multiple of n.
inline Configuration xor_fold(const BitString& s, std::size_t n) {
  if (n == 0) throw PreconditionError("xor_fold: block size must be positive");
  if (s.empty() || s.size() % n != 0)
    throw PreconditionError("xor_fold: length must be a positive multiple of the block size");
  std::vector<std::uint8_t> acc(n, 0);
  for (std::size_t i = 0; i < s.size(); ++i) acc[i % n] ^= s.data()[i];
  return Configuration(BitString(std::move(acc)));
}

/// Uppercase hexadecimal rendering of a configuration, leftmost bit first.
/// The length must be a positive multiple of 4.
inline std::string to_hex(const Configuration& c) {
  if (c.size() % 4 != 0)
    throw DimensionError("to_hex: configuration length must be a multiple of 4");
  static const char* digits = "0123456789ABCDEF";
  std::string out;
  out.reserve(c.size() / 4);
  for (std::size_t i = 0; i < c.size(); i += 4) {
    const unsigned v = (c.bit(i) << 3) | (c.bit(i + 1) << 2) | (c.bit(i + 2) << 1) | c.bit(i + 3);
    out.push_back(digits[v]);
  }
  return out;
}

/// Inverse of to_hex.  Accepts upper- or lowercase digits.
inline Configuration from_hex(std::string_view hex) {
  if (hex.empty()) throw ParseError("from_hex: empty string");
  std::vector<std::uint8_t> bits;
  bits.reserve(hex.size() * 4);
  for (char c : hex) {
    unsigned v = 0;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A') + 10;
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a') + 10;
    } else {
      throw ParseError(std::string("from_hex: invalid hex digit '") + c + "'");
    }
    bits.push_back(static_cast<std::uint8_t>((v >> 3) & 1));
    bits.push_back(static_cast<std::uint8_t>((v >> 2) & 1));
    bits.push_back(static_cast<std::uint8_t>((v >> 1) & 1));
    bits.push_back(static_cast<std::uint8_t>(v & 1));
  }
  return Configuration(BitString(std::move(bits)));
}

}  // namespace chaoshash
