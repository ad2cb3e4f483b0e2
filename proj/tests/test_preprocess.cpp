#include <catch2/catch_amalgamated.hpp>

#include "chaoshash/preprocess.hpp"
#include "vector_file.hpp"

using namespace chaoshash;

TEST_CASE("encode_message renders bytes most significant bit first") {
  // 'T' = 84 = 1010100 in 7 bits, 01010100 in 8
  REQUIRE(encode_message("T", Encoding::kAscii7).to_text() == "1010100");
  REQUIRE(encode_message("T", Encoding::kRaw8).to_text() == "01010100");
  REQUIRE(encode_message("", Encoding::kAscii7).empty());
  REQUIRE(encode_message("Th", Encoding::kAscii7).to_text() == "10101001 101000");
}

TEST_CASE("ascii7 encoding rejects bytes past 127 and names the position") {
  std::vector<std::uint8_t> bytes{'o', 'k', 0xC3, 'x'};
  REQUIRE_NOTHROW(encode_message(bytes, Encoding::kRaw8));
  try {
    encode_message(bytes, Encoding::kAscii7);
    FAIL("expected EncodingError");
  } catch (const EncodingError& e) {
    REQUIRE(e.position() == 2);
  }
}

TEST_CASE("to_binary emits the minimal-width rendering") {
  REQUIRE(to_binary(1).to_text() == "1");
  REQUIRE(to_binary(5).to_text() == "101");
  REQUIRE(to_binary(120).to_text() == "1111000");
  REQUIRE_THROWS_AS(to_binary(0), PreconditionError);
}

TEST_CASE("pad_mark appends marker, length annotation, closing marker") {
  // "" -> "1" (marker), length 1 -> "1", closing "1"
  REQUIRE(pad_mark(BitString()).to_text() == "111");
  // "0" -> "01", length 2 -> "10", closing "1"
  REQUIRE(pad_mark(BitString::parse("0")).to_text() == "01101");
  // length annotation counts the marker bit itself
  BitString seven = BitString::parse("1111111");
  REQUIRE(pad_mark(seven).to_text() == "11111111 10001");  // 7+1 = 8 = "1000"
}

TEST_CASE("mirror appends the reversal, sharing the pivot bit") {
  REQUIRE(mirror(BitString::parse("110")).to_text() == "11011");
  REQUIRE(mirror(BitString::parse("1")).to_text() == "1");
  BitString s = BitString::parse("10010111");
  BitString m = mirror(s);
  REQUIRE(m.size() == 2 * s.size() - 1);
  REQUIRE(m == reverse(m));  // palindrome
  REQUIRE_THROWS_AS(mirror(BitString()), PreconditionError);
}

TEST_CASE("block_granularity is the lcm of 512 and n") {
  REQUIRE(block_granularity(256) == 512);
  REQUIRE(block_granularity(128) == 512);
  REQUIRE(block_granularity(512) == 512);
  REQUIRE(block_granularity(80) == 2560);
  REQUIRE(block_granularity(12) == 1536);
  REQUIRE_THROWS_AS(block_granularity(0), PreconditionError);
}

TEST_CASE("expand_to_blocks repeats the string cyclically") {
  BitString m = BitString::parse("10010111");
  BitString e = expand_to_blocks(m, 256);
  REQUIRE(e.size() == 512);
  for (std::size_t i = 0; i < e.size(); ++i) REQUIRE(e.bit(i) == m.bit(i % m.size()));

  // a string already at a granularity multiple is unchanged
  BitString full = expand_to_blocks(m, 8);  // 8 divides 512, so granularity 512
  REQUIRE(full.size() == 512);
  REQUIRE(expand_to_blocks(full, 8) == full);

  REQUIRE(expand_to_blocks(m, 80).size() == 2560);
  REQUIRE_THROWS_AS(expand_to_blocks(BitString(), 256), PreconditionError);
}

TEST_CASE("HashParams validation") {
  HashParams p;
  REQUIRE_NOTHROW(p.validate());  // default 256 raw8
  p.digest_bits = 0;
  REQUIRE_THROWS_AS(p.validate(), PreconditionError);
  p.digest_bits = 6;
  REQUIRE_THROWS_AS(p.validate(), PreconditionError);
  p.digest_bits = 260;
  REQUIRE_THROWS_AS(p.validate(), PreconditionError);
  for (std::size_t n = 4; n <= 256; n += 4) {
    p.digest_bits = n;
    REQUIRE_NOTHROW(p.validate());
  }
}

TEST_CASE("normalization pipeline reproduces the committed stage vectors") {
  auto sections = testutil::read_sections(testutil::vector_dir() + "/the_original_text_stages.txt");
  const std::string message = sections.at("message");
  HashParams params;
  params.digest_bits = 256;
  params.encoding = Encoding::kAscii7;

  NormalizedInput norm = normalize(message, params);
  REQUIRE(norm.stages.encoded == BitString::parse(sections.at("encoded")));
  REQUIRE(norm.stages.marked == BitString::parse(sections.at("marked")));
  REQUIRE(norm.stages.mirrored == BitString::parse(sections.at("mirrored")));
  REQUIRE(norm.x0.bits() == BitString::parse(sections.at("x0")));

  // the marked prefix is the encoded message plus its marker bit
  BitString prefix = BitString::parse(sections.at("marked-prefix"));
  REQUIRE(prefix.size() == 120);
  for (std::size_t i = 0; i < prefix.size(); ++i)
    REQUIRE(norm.stages.marked.bit(i) == prefix.bit(i));

  REQUIRE(norm.d.size() == 512);
  REQUIRE(norm.stages.expanded == norm.d);
  for (std::size_t i = 0; i < norm.d.size(); ++i)
    REQUIRE(norm.d.bit(i) == norm.stages.mirrored.bit(i % norm.stages.mirrored.size()));
}

TEST_CASE("normalize on the empty message") {
  HashParams params;  // raw8, n=256
  NormalizedInput norm = normalize("", params);
  // "" -> "111" -> "11111" -> 512 ones -> x0 all zero (even fold count)
  REQUIRE(norm.stages.marked.to_text() == "111");
  REQUIRE(norm.stages.mirrored.to_text() == "11111");
  REQUIRE(norm.d.size() == 512);
  for (std::size_t i = 0; i < 512; ++i) REQUIRE(norm.d.bit(i) == 1);
  REQUIRE(norm.x0.bits() == BitString::zeros(256));
}
