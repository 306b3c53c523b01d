#include <gtest/gtest.h>

#include <random>
#include <set>

#include "seqlab/error.hpp"
#include "seqlab/selection.hpp"
#include "test_support.hpp"

namespace seqlab {
namespace {

using testing::all_strings;
using testing::bits;

BitString random_bits(std::mt19937_64& rng, std::size_t n) {
  BitString::Builder b(n);
  for (std::size_t i = 0; i < n; ++i) b.push_back(rng() & 1u);
  return std::move(b).build();
}

TEST(Select, WorkedExample) {
  const SelectionResult r = select(bits("0011"), bits("0101"));
  EXPECT_EQ(r.selected, bits("01"));
  EXPECT_EQ(r.positions, (std::vector<std::size_t>{2, 4}));
}

TEST(Select, TrivialSelectors) {
  EXPECT_TRUE(select(bits("1011"), bits("0000")).selected.empty());
  EXPECT_EQ(select(bits("1010"), bits("1111")).selected, bits("1010"));
  EXPECT_THROW((void)select(bits("101"), bits("10")), DomainError);
}

TEST(Select, SelfSelectionIsAllOnes) {
  std::mt19937_64 rng(21);
  for (std::size_t n : {0u, 1u, 70u, 1000u}) {
    const BitString x = random_bits(rng, n);
    const SelectionResult r = select(x, x);
    EXPECT_EQ(r.selected, BitString::filled(x.count_ones(), true));
  }
}

TEST(Select, AgreesWithNaiveLoop) {
  std::mt19937_64 rng(22);
  for (std::size_t n : {1u, 63u, 64u, 65u, 500u}) {
    const BitString x = random_bits(rng, n);
    const BitString y = random_bits(rng, n);
    std::string expect;
    std::vector<std::size_t> pos;
    for (std::size_t i = 1; i <= n; ++i) {
      if (y[i]) {
        expect += x[i] ? '1' : '0';
        pos.push_back(i);
      }
    }
    const SelectionResult r = select(x, y);
    EXPECT_EQ(r.selected.to_text(), expect);
    EXPECT_EQ(r.positions, pos);
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(bits("0101")), bits("1010"));
  EXPECT_EQ(complement(BitString()), BitString());
  EXPECT_EQ(complement(complement(bits("0011"))), bits("0011"));
}

TEST(Split, Examples) {
  EXPECT_EQ(split(bits("0011"), bits("0101")), std::make_pair(bits("01"), bits("01")));
  EXPECT_EQ(split(bits("0110"), bits("1111")), std::make_pair(bits("0110"), BitString()));
  EXPECT_EQ(split(bits("0110"), bits("0000")), std::make_pair(BitString(), bits("0110")));
  EXPECT_THROW((void)split(bits("0"), bits("00")), DomainError);
}

TEST(Merge, Examples) {
  EXPECT_EQ(merge(bits("01"), bits("01"), bits("0101")), bits("0011"));
  EXPECT_EQ(merge(BitString(), bits("110"), bits("000")), bits("110"));
  // x = 11001010, y = 01100110: x/y reads positions 2,3,6,7 -> 1001,
  // x/ybar reads positions 1,4,5,8 -> 1010.
  const auto parts = split(bits("11001010"), bits("01100110"));
  EXPECT_EQ(parts.first, bits("1001"));
  EXPECT_EQ(parts.second, bits("1010"));
  EXPECT_EQ(merge(parts.first, parts.second, bits("01100110")), bits("11001010"));
  EXPECT_THROW((void)merge(bits("1"), bits("1"), bits("11")), DomainError);
  EXPECT_THROW((void)merge(bits("11"), BitString(), bits("10")), DomainError);
}

TEST(Merge, InvertsSplitExhaustivelyUpToLength10) {
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto strings = all_strings(n);
    for (const BitString& y : strings) {
      for (const BitString& x : strings) {
        const auto [a, b] = split(x, y);
        ASSERT_EQ(a.size() + b.size(), n);
        ASSERT_EQ(merge(a, b, y), x) << x << " " << y;
      }
    }
  }
}

TEST(Merge, UniqueOnValidShapes) {
  // Every (a, b) of the right shape yields a distinct x that splits back.
  const BitString y = bits("101100");
  std::set<std::string> seen;
  for (const BitString& a : all_strings(3)) {
    for (const BitString& b : all_strings(3)) {
      const BitString x = merge(a, b, y);
      EXPECT_EQ(split(x, y), std::make_pair(a, b));
      seen.insert(x.to_text());
    }
  }
  EXPECT_EQ(seen.size(), 64u);
}

TEST(Merge, InvertsSplitOnLongRandomPairs) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 100000 + (rng() % 200);
    const BitString x = random_bits(rng, n);
    const BitString y = random_bits(rng, n);
    const auto [a, b] = split(x, y);
    ASSERT_EQ(merge(a, b, y), x);
  }
}

TEST(TauPrefix, Examples) {
  EXPECT_EQ(tau_prefix(bits("0101"), 2), (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(tau_prefix(bits("1001"), 1), (std::vector<std::size_t>{1}));
  EXPECT_TRUE(tau_prefix(bits("000"), 0).empty());
  EXPECT_THROW((void)tau_prefix(bits("0100"), 2), DomainError);
}

TEST(TauPrefix, PreimageFractionIsDyadic) {
  // y = 0101: 4 of the 16 strings x have x/y starting with 01.
  std::size_t hits = 0;
  for (const BitString& x : all_strings(4)) {
    if (bits("01").is_prefix_of(select(x, bits("0101")).selected)) ++hits;
  }
  EXPECT_EQ(hits, 4u);

  // All y up to length 8, all s up to count_ones(y).
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto strings = all_strings(n);
    for (const BitString& y : strings) {
      const std::size_t ones = y.count_ones();
      std::vector<BitString> selected;
      selected.reserve(strings.size());
      for (const BitString& x : strings) selected.push_back(select(x, y).selected);
      for (std::size_t m = 0; m <= ones; ++m) {
        for (const BitString& s : all_strings(m)) {
          std::size_t count = 0;
          for (const BitString& sel : selected) count += s.is_prefix_of(sel);
          ASSERT_EQ(count << m, strings.size()) << y << " " << s;
        }
      }
    }
  }
}

}  // namespace
}  // namespace seqlab
