#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "seqlab/bitstring.hpp"
#include "seqlab/error.hpp"
#include "seqlab/generators.hpp"
#include "test_support.hpp"

namespace seqlab {
namespace {

using testing::bits;

BitString random_bits(std::mt19937_64& rng, std::size_t n) {
  BitString::Builder b(n);
  for (std::size_t i = 0; i < n; ++i) b.push_back(rng() & 1u);
  return std::move(b).build();
}

TEST(BitStringText, ParsesDigitsInOrder) {
  const BitString s = bits("0101");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_FALSE(s[1]);
  EXPECT_TRUE(s[2]);
  EXPECT_FALSE(s[3]);
  EXPECT_TRUE(s[4]);
}

TEST(BitStringText, EmptyAndWhitespace) {
  EXPECT_TRUE(bits("").empty());
  EXPECT_EQ(bits("01 10\n"), bits("0110"));
  EXPECT_EQ(bits("\t1\r\n0 "), bits("10"));
}

TEST(BitStringText, RejectsOtherCharactersWithPosition) {
  try {
    (void)BitString::from_text("01x1");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW((void)BitString::from_text("012"), FormatError);
}

TEST(BitStringText, RoundTripRandomLengths) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {0u, 1u, 63u, 64u, 65u, 127u, 128u, 1000u}) {
    const BitString s = random_bits(rng, n);
    EXPECT_EQ(BitString::from_text(s.to_text()), s) << "n=" << n;
  }
}

TEST(BitStringCount, OnesAndZeros) {
  EXPECT_EQ(bits("0101").count_ones(), 2u);
  EXPECT_EQ(bits("").count_ones(), 0u);
  EXPECT_EQ(bits("1111").count_ones(), 4u);
  std::mt19937_64 rng(11);
  for (std::size_t n : {5u, 64u, 200u}) {
    const BitString s = random_bits(rng, n);
    EXPECT_EQ(s.count_ones() + s.count_zeros(), s.size());
  }
}

TEST(BitStringSlice, WholeStringIsIdentity) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 64u, 130u}) {
    const BitString s = random_bits(rng, n);
    EXPECT_EQ(s.slice(1, s.size()), s);
  }
}

TEST(BitStringSlice, MatchesTextSubstring) {
  std::mt19937_64 rng(5);
  const BitString s = random_bits(rng, 300);
  const std::string t = s.to_text();
  for (std::size_t first : {1u, 2u, 63u, 64u, 65u, 129u}) {
    for (std::size_t last : {first, first + 1, first + 63, first + 64, std::size_t{300}}) {
      if (last > 300 || last < first) continue;
      EXPECT_EQ(s.slice(first, last).to_text(), t.substr(first - 1, last - first + 1));
    }
  }
  EXPECT_TRUE(s.slice(5, 4).empty());
  EXPECT_THROW((void)s.slice(0, 3), DomainError);
  EXPECT_THROW((void)s.slice(2, 301), DomainError);
}

TEST(BitStringSlice, PrefixAndPrefixRelation) {
  const BitString s = bits("110100111");
  EXPECT_EQ(s.prefix(4), bits("1101"));
  EXPECT_TRUE(s.prefix(4).is_prefix_of(s));
  EXPECT_FALSE(bits("111").is_prefix_of(s));
  EXPECT_TRUE(BitString().is_prefix_of(s));
  EXPECT_THROW((void)s.prefix(10), DomainError);
}

TEST(BitStringWindow, ReadsAcrossWordBoundaries) {
  std::mt19937_64 rng(9);
  const BitString s = random_bits(rng, 200);
  for (std::size_t i : {1u, 60u, 64u, 65u, 100u}) {
    for (unsigned k : {1u, 5u, 24u, 64u}) {
      if (i + k - 1 > s.size()) continue;
      std::uint64_t expect = 0;
      for (unsigned j = 0; j < k; ++j) expect = (expect << 1) | s[i + j];
      EXPECT_EQ(s.window(i, k), expect) << "i=" << i << " k=" << k;
    }
  }
}

TEST(BitStringOps, ComplementAndAt) {
  EXPECT_EQ(~bits("0101"), bits("1010"));
  EXPECT_EQ(~BitString(), BitString());
  EXPECT_EQ(~~bits("0011"), bits("0011"));
  EXPECT_EQ(~BitString::filled(70, false), BitString::filled(70, true));
  EXPECT_THROW((void)bits("01").at(3), DomainError);
  EXPECT_THROW((void)bits("01").at(0), DomainError);
  EXPECT_TRUE(bits("01").at(2));
}

TEST(BitStringBuilder, AppendRunsAndStrings) {
  BitString::Builder b;
  b.push_back(true);
  b.append_run(false, 70);
  b.append(bits("101"));
  b.append_run(true, 2);
  const BitString s = std::move(b).build();
  EXPECT_EQ(s.to_text(), "1" + std::string(70, '0') + "101" + "11");
}

TEST(BitStringPacked, HeaderAndBitOrderAreExact) {
  std::ostringstream out;
  bits("1011").write_packed(out);
  const std::string bytes = out.str();
  ASSERT_EQ(bytes.size(), 9u);
  EXPECT_EQ(static_cast<unsigned char>(bytes[0]), 4u);
  for (int j = 1; j < 8; ++j) EXPECT_EQ(bytes[j], '\0');
  // 1011 then zero padding, most significant bit first
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 0xB0u);
}

TEST(BitStringPacked, RoundTripAndPaddingCheck) {
  std::mt19937_64 rng(13);
  for (std::size_t n : {0u, 1u, 8u, 9u, 64u, 100u, 1000u}) {
    const BitString s = random_bits(rng, n);
    std::stringstream io;
    s.write_packed(io);
    EXPECT_EQ(BitString::read_packed(io), s) << "n=" << n;
  }
  std::string corrupt("\x03\0\0\0\0\0\0\0\xFF", 9);
  std::istringstream in(corrupt);
  EXPECT_THROW((void)BitString::read_packed(in), FormatError);
  std::istringstream truncated(std::string("\x10\0\0", 3));
  EXPECT_THROW((void)BitString::read_packed(truncated), FormatError);
}

TEST(SequenceSourcePrefix, ConstantAndConsistency) {
  EXPECT_EQ(ConstantSource(true).prefix(3), bits("111"));
  const ChampernowneSource champ;
  EXPECT_EQ(champ.prefix(10), bits("1101110010"));
  const BitString long_prefix = champ.prefix(500);
  for (std::size_t n : {0u, 1u, 17u, 64u, 499u}) {
    EXPECT_EQ(champ.prefix(n), long_prefix.prefix(n));
  }
  EXPECT_EQ(FibonacciSource().prefix(13), bits("0100101001001"));
}

TEST(SequenceSourcePrefix, DefaultPrefixUsesBitAt) {
  const MaterializedSource src(bits("0110"), {});
  EXPECT_EQ(src.SequenceSource::prefix(4), bits("0110"));
  EXPECT_THROW((void)src.bit_at(5), DomainError);
}

}  // namespace
}  // namespace seqlab
