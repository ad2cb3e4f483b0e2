#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "chaoshash/hasher.hpp"
#include "vector_file.hpp"

using namespace chaoshash;

TEST_CASE("digest vectors reproduce") {
  auto vectors = testutil::read_digest_vectors(testutil::vector_dir() + "/digests.txt");
  REQUIRE(vectors.size() >= 8);
  for (const auto& v : vectors) {
    CAPTURE(v.digest);
    Digest digest = hash(v.message, v.params);
    REQUIRE(digest.hex == v.digest);
    REQUIRE(to_hex(digest.config) == digest.hex);
    REQUIRE(digest.config.size() == v.params.digest_bits);
  }
}

TEST_CASE("string and byte overloads agree") {
  HashParams params;
  params.encoding = Encoding::kAscii7;
  std::string text = "The original text";
  std::vector<std::uint8_t> bytes(text.begin(), text.end());
  REQUIRE(hash(text, params).hex == hash(bytes, params).hex);
  REQUIRE(hash(text, params).hex == hash_bits(encode_message(text, params.encoding), params).hex);
}

TEST_CASE("detailed hash exposes the run's internals consistently") {
  HashParams params;
  params.digest_bits = 128;
  DetailedHash detail = hash_bits_detailed(encode_message("abc", Encoding::kRaw8), params);
  REQUIRE(detail.steps == detail.normalized.d.size());
  REQUIRE(detail.steps == 512);
  REQUIRE(detail.digest.hex == "4B2024D7F760FFA4D12595B3C8B42C08");
  REQUIRE(detail.normalized.x0.size() == 128);
}

TEST_CASE("case flip of one letter moves many digest bits") {
  HashParams params;
  params.encoding = Encoding::kAscii7;
  Digest upper = hash("The original text", params);
  Digest lower = hash("the original text", params);
  REQUIRE(hamming(upper.config, lower.config) == 101);
}

TEST_CASE("empty message digests identically under both encodings") {
  HashParams params;
  Digest raw = hash("", params);
  params.encoding = Encoding::kAscii7;
  Digest ascii = hash("", params);
  REQUIRE(raw.hex == ascii.hex);
  REQUIRE(raw.hex == std::string(64, '0'));
}

TEST_CASE("keyed hashing differs from unkeyed and between keys") {
  HashParams params;
  params.encoding = Encoding::kAscii7;
  Digest unkeyed = hash("The original text", params);
  params.key = 42;
  Digest key42 = hash("The original text", params);
  params.key = 43;
  Digest key43 = hash("The original text", params);
  REQUIRE(unkeyed.hex != key42.hex);
  REQUIRE(key42.hex != key43.hex);
}

TEST_CASE("digest hex is uppercase, most significant bit first") {
  HashParams params;
  Digest digest = hash("sample", params);
  REQUIRE(digest.hex.size() == 64);
  for (char c : digest.hex)
    REQUIRE(((c >= '0' && c <= '9') || (c >= 'A' && c <= 'F')));
  // first hex digit is the first four state bits
  unsigned first = (digest.config.bit(0) << 3) | (digest.config.bit(1) << 2) |
                   (digest.config.bit(2) << 1) | digest.config.bit(3);
  REQUIRE(digest.hex[0] == "0123456789ABCDEF"[first]);
}

TEST_CASE("hash_file reads binary content") {
  const std::string path = "hasher_test_tmp.bin";
  {
    std::ofstream out(path, std::ios::binary);
    out << "The original text";
  }
  HashParams params;
  Digest from_file = hash_file(path, params);
  Digest from_bytes = hash("The original text", params);
  REQUIRE(from_file.hex == from_bytes.hex);
  std::remove(path.c_str());
  REQUIRE_THROWS_AS(hash_file("does-not-exist.bin", params), FileError);
}

TEST_CASE("invalid parameters are rejected before any work") {
  HashParams params;
  params.digest_bits = 6;
  REQUIRE_THROWS_AS(hash("x", params), PreconditionError);
  REQUIRE_THROWS_AS(hash_bits(BitString::parse("1"), params), PreconditionError);
}

TEST_CASE("ascii7 encoding failures carry through hash") {
  HashParams params;
  params.encoding = Encoding::kAscii7;
  std::vector<std::uint8_t> bytes{0x80};
  REQUIRE_THROWS_AS(hash(bytes, params), EncodingError);
}
