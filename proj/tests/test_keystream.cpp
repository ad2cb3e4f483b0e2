#include <catch2/catch_amalgamated.hpp>

#include "chaoshash/keystream.hpp"
#include "chaoshash/preprocess.hpp"

using namespace chaoshash;

TEST_CASE("build_u reads 8-bit blocks over eight rotation passes") {
  // 16-bit input -> 2 blocks per pass, 16 terms; worked out by hand.
  UStream u = build_u(BitString::parse("00000001 00000010"));
  const std::vector<std::uint8_t> expected{1, 2,  2,  4,  4,  8,  8,   16,
                                           16, 32, 32, 64, 64, 128, 129, 0};
  REQUIRE(u.terms == expected);
}

TEST_CASE("build_u matches an explicit rotate-then-read oracle") {
  BitString d = BitString::parse("10110100 11100111 01010001 11010011");
  UStream u = build_u(d);
  REQUIRE(u.size() == d.size());
  const std::size_t blocks = d.size() / 8;
  for (std::size_t pass = 0; pass < 8; ++pass) {
    BitString rotated = rotate_left(d, pass);
    for (std::size_t b = 0; b < blocks; ++b) {
      unsigned value = 0;
      for (std::size_t j = 0; j < 8; ++j) value = value << 1 | rotated.bit(8 * b + j);
      REQUIRE(u.terms[pass * blocks + b] == value);
    }
  }
}

TEST_CASE("build_u validates its input length") {
  REQUIRE_THROWS_AS(build_u(BitString()), DimensionError);
  REQUIRE_THROWS_AS(build_u(BitString::parse("1011010")), DimensionError);
}

TEST_CASE("first-pass u terms for the reference message") {
  HashParams params;
  params.digest_bits = 256;
  params.encoding = Encoding::kAscii7;
  NormalizedInput norm = normalize("The original text", params);
  UStream u = build_u(norm.d);
  REQUIRE(u.size() == 512);
  // pass 0 reads the carrier's own bytes; pass 1 starts one bit in
  REQUIRE(u.terms[0] == 169);
  REQUIRE(u.terms[1] == 163);
  REQUIRE(u.terms[2] == 42);
  REQUIRE(u.terms[3] == 13);
  REQUIRE(u.terms[64] == 83);
  REQUIRE(u.terms[65] == 70);
  REQUIRE(u.terms[66] == 84);
  REQUIRE(u.terms[67] == 27);
}

TEST_CASE("Strategy validates its terms") {
  REQUIRE_THROWS_AS(Strategy({4}, 4), PreconditionError);
  REQUIRE_THROWS_AS(Strategy({0}, 0), PreconditionError);
  Strategy s({0, 3, 1}, 4);
  REQUIRE(s.size() == 3);
  REQUIRE(s.term(1) == 3);
  REQUIRE_THROWS_AS(s.term(3), DimensionError);
  REQUIRE(s.head() == 0);
  REQUIRE(s.tail().terms() == std::vector<std::uint16_t>{3, 1});
  Strategy empty = Strategy::empty(4);
  REQUIRE(empty.is_empty());
  REQUIRE_THROWS_AS(empty.head(), ExhaustedStrategyError);
  REQUIRE_THROWS_AS(empty.tail(), ExhaustedStrategyError);
}

TEST_CASE("build_strategy seeds from u unkeyed and from the key when given") {
  UStream u;
  u.terms = {200, 17, 3, 250};
  HashParams params;
  params.digest_bits = 16;

  // unkeyed: S0 = u0 mod n, then S[t] = (u[t] + 2 S[t-1] + t) mod n
  Strategy s = build_strategy(u, params);
  REQUIRE(s.size() == u.size());
  REQUIRE(s.term(0) == 200 % 16);                            // 8
  REQUIRE(s.term(1) == (17 + 2 * 8 + 1) % 16);               // 2
  REQUIRE(s.term(2) == (3 + 2 * 2 + 2) % 16);                // 9
  REQUIRE(s.term(3) == (250 + 2 * 9 + 3) % 16);              // 15

  params.key = 300;
  Strategy keyed = build_strategy(u, params);
  REQUIRE(keyed.term(0) == 300 % 16);                        // 12
  REQUIRE(keyed.term(1) == (17 + 2 * 12 + 1) % 16);          // 10
  // the tail recurrence is otherwise identical
  REQUIRE(keyed.size() == u.size());
}

TEST_CASE("strategy values for the reference message") {
  HashParams params;
  params.digest_bits = 256;
  params.encoding = Encoding::kAscii7;
  NormalizedInput norm = normalize("The original text", params);
  Strategy s = build_strategy(build_u(norm.d), params);
  REQUIRE(s.size() == 512);
  const std::vector<std::uint16_t> head(s.terms().begin(), s.terms().begin() + 6);
  REQUIRE(head == std::vector<std::uint16_t>{169, 246, 24, 64, 128, 185});
  for (std::uint16_t t : s.terms()) REQUIRE(t < 256);
}

TEST_CASE("build_strategy rejects an empty u stream") {
  HashParams params;
  REQUIRE_THROWS_AS(build_strategy(UStream{}, params), PreconditionError);
}
