#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chaoshash/bitstring.hpp"
#include "chaoshash/error.hpp"

namespace chaoshash {

/// How message bytes are turned into bits.
enum class Encoding {
  /// Eight bits per byte, most significant bit first.  Accepts any byte.
  kRaw8,
  /// Seven bits per byte, most significant bit first.  Rejects bytes >= 128.
  /// Useful for plain ASCII text, where the leading zero bit carries no
  /// information.
  kAscii7,
};

/// Parameters of the hash function.
struct HashParams {
  /// Digest length in bits.  Must be a positive multiple of 4, at most 256.
  std::size_t digest_bits = 256;

  /// Message byte encoding.
  Encoding encoding = Encoding::kRaw8;

  /// Optional key.  When present it seeds the strategy; when absent the
  /// strategy is seeded from the preprocessed message itself.
  std::optional<std::uint64_t> key;

  void validate() const {
    if (digest_bits == 0 || digest_bits % 4 != 0 || digest_bits > 256)
      throw PreconditionError(
          "HashParams: digest_bits must be a positive multiple of 4, at most 256");
  }
};

/// Encodes message bytes as a bit string per the chosen encoding.
inline BitString encode_message(const std::vector<std::uint8_t>& bytes, Encoding encoding) {
  const int width = encoding == Encoding::kAscii7 ? 7 : 8;
  std::vector<std::uint8_t> bits;
  bits.reserve(bytes.size() * static_cast<std::size_t>(width));
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const std::uint8_t b = bytes[i];
    if (encoding == Encoding::kAscii7 && b >= 128)
      throw EncodingError("encode_message: byte value " + std::to_string(b) +
                              " at position " + std::to_string(i) +
                              " does not fit in 7 bits",
                          i);
    for (int j = width - 1; j >= 0; --j)
      bits.push_back(static_cast<std::uint8_t>((b >> j) & 1));
  }
  return BitString(std::move(bits));
}

inline BitString encode_message(std::string_view text, Encoding encoding) {
  return encode_message(std::vector<std::uint8_t>(text.begin(), text.end()), encoding);
}

/// Minimal-width binary rendering of `value`, most significant bit first.
/// `value` must be positive (zero has no minimal-width rendering).
inline BitString to_binary(std::uint64_t value) {
  if (value == 0) throw PreconditionError("to_binary: value must be positive");
  std::vector<std::uint8_t> bits;
  for (std::uint64_t v = value; v != 0; v >>= 1)
    bits.push_back(static_cast<std::uint8_t>(v & 1));
  std::reverse(bits.begin(), bits.end());
  return BitString(std::move(bits));
}

/// Appends a '1' marker bit and then the length annotation: the minimal
/// binary rendering of the marked length (original length + 1) followed by
/// a closing '1'.  Accepts the empty string.
inline BitString pad_mark(const BitString& s) {
  BitString out = s;
  out.append_bit(1);
  out.append(to_binary(out.size()));
  out.append_bit(1);
  return out;
}

/// Palindromic extension: appends the reversal of all but the last bit, so
/// a string of length L becomes one of length 2L - 1 with the original
/// final bit as the shared pivot.  The input must be non-empty.
inline BitString mirror(const BitString& s) {
  if (s.empty()) throw PreconditionError("mirror: input must be non-empty");
  std::vector<std::uint8_t> out = s.data();
  out.reserve(2 * s.size() - 1);
  out.insert(out.end(), s.data().rbegin() + 1, s.data().rend());
  return BitString(std::move(out));
}

/// Block granularity of the preprocessed message for an n-bit digest:
/// the least common multiple of 512 and n.
inline std::size_t block_granularity(std::size_t n) {
  if (n == 0) throw PreconditionError("block_granularity: n must be positive");
  return std::lcm<std::size_t>(512, n);
}

/// Repeats `s` head-to-tail until its length is the smallest positive
/// multiple of the block granularity that is >= the original length.  A
/// string already at a multiple is returned unchanged.
inline BitString expand_to_blocks(const BitString& s, std::size_t n) {
  if (s.empty()) throw PreconditionError("expand_to_blocks: input must be non-empty");
  const std::size_t g = block_granularity(n);
  const std::size_t total = ((s.size() + g - 1) / g) * g;
  std::vector<std::uint8_t> out;
  out.reserve(total);
  while (out.size() + s.size() <= total)
    out.insert(out.end(), s.data().begin(), s.data().end());
  const std::size_t remainder = total - out.size();
  out.insert(out.end(), s.data().begin(),
             s.data().begin() + static_cast<std::ptrdiff_t>(remainder));
  return BitString(std::move(out));
}

/// Intermediate results of the normalization pipeline, kept for
/// inspection, test vectors and the `trace` tooling.
struct StageLog {
  BitString encoded;
  BitString marked;
  BitString mirrored;
  BitString expanded;
};

/// A message after normalization: the preprocessed bit string `d` (a
/// positive multiple of the block granularity long) and the initial
/// configuration `x0` obtained by folding `d` into n bits.
struct NormalizedInput {
  BitString d;
  Configuration x0;
  StageLog stages;
};

/// Runs the full normalization pipeline on already-encoded bits:
/// mark, mirror, expand, fold.
inline NormalizedInput normalize_bits(const BitString& encoded, const HashParams& params) {
  params.validate();
  BitString marked = pad_mark(encoded);
  BitString mirrored = mirror(marked);
  BitString expanded = expand_to_blocks(mirrored, params.digest_bits);
  Configuration x0 = xor_fold(expanded, params.digest_bits);
  return NormalizedInput{expanded,
                         std::move(x0),
                         StageLog{encoded, std::move(marked), std::move(mirrored), expanded}};
}

/// Encodes and normalizes message bytes.
inline NormalizedInput normalize(const std::vector<std::uint8_t>& bytes,
                                 const HashParams& params) {
  params.validate();
  return normalize_bits(encode_message(bytes, params.encoding), params);
}

inline NormalizedInput normalize(std::string_view text, const HashParams& params) {
  params.validate();
  return normalize_bits(encode_message(text, params.encoding), params);
}

}  // namespace chaoshash
