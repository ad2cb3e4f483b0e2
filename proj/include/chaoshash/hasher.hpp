#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chaoshash/bitstring.hpp"
#include "chaoshash/dynamics.hpp"
#include "chaoshash/error.hpp"
#include "chaoshash/keystream.hpp"
#include "chaoshash/preprocess.hpp"

namespace chaoshash {

/// A finished digest: the final configuration and its hex rendering.
struct Digest {
  Configuration config;
  std::string hex;
};

/// A digest together with everything produced along the way, for
/// diagnostics, test vectors and benchmarks.
struct DetailedHash {
  Digest digest;
  NormalizedInput normalized;
  std::size_t steps = 0;  // iteration steps performed (= |d|)
};

/// Hashes an already-encoded bit string: normalize, derive the strategy,
/// iterate the negation system over the initial configuration.
inline DetailedHash hash_bits_detailed(const BitString& encoded, const HashParams& params) {
  params.validate();
  NormalizedInput norm = normalize_bits(encoded, params);
  UStream u = build_u(norm.d);
  Strategy strategy = build_strategy(u, params);
  Configuration x = norm.x0;
  for (std::uint16_t t : strategy.terms()) x.flip_bit(t);
  std::string hex = to_hex(x);
  return DetailedHash{Digest{std::move(x), std::move(hex)}, std::move(norm), strategy.size()};
}

inline Digest hash_bits(const BitString& encoded, const HashParams& params) {
  return hash_bits_detailed(encoded, params).digest;
}

/// Hashes raw message bytes.
inline Digest hash(const std::vector<std::uint8_t>& bytes, const HashParams& params) {
  params.validate();
  return hash_bits(encode_message(bytes, params.encoding), params);
}

/// Hashes text (its bytes, per the configured encoding).
inline Digest hash(std::string_view text, const HashParams& params) {
  params.validate();
  return hash_bits(encode_message(text, params.encoding), params);
}

/// Hashes the contents of a file, read as binary.
inline Digest hash_file(const std::string& path, const HashParams& params) {
  params.validate();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("hash_file: cannot open '" + path + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw FileError("hash_file: error while reading '" + path + "'");
  return hash(bytes, params);
}

}  // namespace chaoshash
