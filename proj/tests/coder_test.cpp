#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "seqlab/coder.hpp"
#include "seqlab/error.hpp"
#include "seqlab/generators.hpp"
#include "seqlab/stats.hpp"
#include "test_support.hpp"

namespace seqlab {
namespace {

using testing::all_strings;
using testing::bits;
using testing::sample;

const Rational kThird(1, 3);

std::vector<MeasurePtr> families() {
  return {
      uniform_measure(),
      std::make_shared<BernoulliMeasure>(kThird),
      std::make_shared<BernoulliMeasure>(Rational(1, 10)),
      std::make_shared<Markov1Measure>(Rational(1, 4), Rational(3, 4), Rational(1, 2)),
  };
}

BitString random_bits(std::mt19937_64& rng, std::size_t n) {
  BitString::Builder b(n);
  for (std::size_t i = 0; i < n; ++i) b.push_back(rng() & 1u);
  return std::move(b).build();
}

TEST(Encode, UniformIsNearIdentity) {
  std::mt19937_64 rng(31);
  for (std::size_t n : {1u, 10u, 100u, 1000u}) {
    const BitString y = random_bits(rng, n);
    const CodeStream s = encode(*uniform_measure(), y);
    EXPECT_LE(s.bits.size(), n);
    EXPECT_GE(s.terminated.size(), n);
    EXPECT_LE(s.terminated.size(), n + 1 + kCodeLengthSlack);
    EXPECT_TRUE(s.bits.is_prefix_of(y));
    EXPECT_EQ(decode(*uniform_measure(), s.terminated, n), y);
  }
  EXPECT_EQ(decode(*uniform_measure(), bits("0101"), 4), bits("0101"));
}

TEST(Encode, PointMassCodeIsNearEmpty) {
  const auto src = std::make_shared<FibonacciSource>();
  const PointMassMeasure pm(src);
  const BitString y = src->prefix(100);
  const CodeStream s = encode(pm, y);
  EXPECT_LE(s.terminated.size(), static_cast<std::size_t>(kCodeLengthSlack));
  EXPECT_EQ(decode(pm, s.terminated, 100), y);
}

TEST(Encode, ZeroProbabilityNamesTheBit) {
  const PointMassMeasure pm(std::make_shared<FibonacciSource>());
  try {
    (void)encode(pm, bits("01000"));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("bit 5"), std::string::npos) << e.what();
  }
}

TEST(Encode, BernoulliThirdRateAndRegression) {
  const BitString y = bernoulli_pseudo(kThird, 1, 100000);
  const BernoulliMeasure m(kThird);
  const CodeStream s = encode(m, y);
  const double h = -(1.0 / 3) * std::log2(1.0 / 3) - (2.0 / 3) * std::log2(2.0 / 3);
  EXPECT_NEAR(static_cast<double>(s.bits.size()) / 1e5, h, 0.02);
  EXPECT_EQ(s.bits.size(), 91797u);
  EXPECT_EQ(s.bits.size() + s.pending, 91799u);
  EXPECT_EQ(s.terminated.size(), 91801u);
  EXPECT_EQ(decode(m, s.terminated, y.size()), y);
  EXPECT_GE(empirical_entropy(s.terminated, 1), 0.99);
}

TEST(Encode, LengthContractAndRoundTripExhaustive) {
  for (const auto& m : families()) {
    for (std::size_t n = 0; n <= 10; ++n) {
      for (const BitString& y : all_strings(n)) {
        const CodeStream s = encode(*m, y);
        const long l = ceil_neg_log2_prob(*m, y);
        const long ef = static_cast<long>(s.bits.size() + s.pending);
        ASSERT_LE(std::labs(ef - l), kCodeLengthSlack) << y;
        ASSERT_LE(static_cast<long>(s.terminated.size()), l + kCodeLengthSlack) << y;
        ASSERT_EQ(decode(*m, s.terminated, n), y) << m->descriptor().to_text() << y;
      }
    }
  }
}

TEST(Encode, RoundTripAllLength12UnderThirdAndUniform) {
  for (const MeasurePtr& m : {uniform_measure(), MeasurePtr(std::make_shared<BernoulliMeasure>(kThird))}) {
    for (const BitString& y : all_strings(12)) {
      ASSERT_EQ(decode(*m, encode(*m, y).terminated, 12), y);
    }
  }
}

TEST(Encode, EmissionIsPrefixMonotone) {
  for (const auto& m : families()) {
    const BitString y = sample(*m, 5, 3000);
    ArithmeticEncoder enc(*m);
    BitString previous;
    for (std::size_t i = 1; i <= y.size(); ++i) {
      enc.push(y[i]);
      ASSERT_TRUE(previous.is_prefix_of(enc.bits()));
      // The terminated code of every prefix extends the emitted bits.
      if (i % 97 == 0) ASSERT_TRUE(enc.bits().is_prefix_of(enc.terminate()));
      previous = enc.bits();
    }
  }
}

TEST(Encode, WidthTimesScaleEqualsProbability) {
  for (const auto& m : families()) {
    const BitString y = sample(*m, 6, 400);
    ArithmeticEncoder enc(*m);
    Rational p = 1;
    for (std::size_t i = 1; i <= y.size(); ++i) {
      enc.push(y[i]);
      p *= m->conditional(y, i);
      const CoderInterval& iv = enc.interval();
      Rational width(iv.width, iv.denom);
      width.canonicalize();
      const std::size_t scale = enc.emitted() + enc.pending();
      ASSERT_EQ(width, p * Rational(BigInt(1) << static_cast<unsigned>(scale), 1)) << i;
      const CodeStream st = enc.stream();
      ASSERT_LE(Rational(0), st.lo);
      ASSERT_LT(st.lo, st.hi);
      ASSERT_LE(st.hi, Rational(1));
    }
  }
}

TEST(Decode, MonotoneExhaustiveShort) {
  const BernoulliMeasure m(kThird);
  for (std::size_t len = 0; len < 14; ++len) {
    for (const BitString& z : all_strings(len)) {
      const BitString d = decode(m, z, 64);
      for (const bool b : {false, true}) {
        BitString::Builder ext;
        ext.append(z);
        ext.push_back(b);
        ASSERT_TRUE(d.is_prefix_of(decode(m, std::move(ext).build(), 64))) << z;
      }
    }
  }
}

TEST(Decode, MonotoneRandomLong) {
  std::mt19937_64 rng(37);
  for (const auto& m : families()) {
    for (int t = 0; t < 20; ++t) {
      const BitString z = random_bits(rng, 64);
      BitString previous = decode(*m, BitString(), 200);
      for (std::size_t k = 1; k <= 64; ++k) {
        const BitString d = decode(*m, z.prefix(k), 200);
        ASSERT_TRUE(previous.is_prefix_of(d)) << z << " k=" << k;
        previous = d;
      }
    }
  }
}

TEST(Decode, RespectsMaxOut) {
  const BitString y = bits("0110100111");
  const CodeStream s = encode(*uniform_measure(), y);
  EXPECT_EQ(decode(*uniform_measure(), s.terminated, 4), y.prefix(4));
  EXPECT_TRUE(decode(*uniform_measure(), s.terminated, 0).empty());
}

TEST(Curve, BoundsAndGapsForBernoulliThird) {
  const BernoulliMeasure m(kThird);
  const BitString y = bernoulli_pseudo(kThird, 1, 10000);
  std::vector<std::size_t> checkpoints;
  for (std::size_t n = 1; n <= 10000; n += 1) checkpoints.push_back(n);
  const CodeLengthCurve c = code_length_curve(m, y, checkpoints);
  ASSERT_EQ(c.points.size(), checkpoints.size());
  Rational p = 1;
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const CodeLengthPoint& pt = c.points[i];
    p *= m.conditional(y, pt.n);
    if (pt.n % 500 == 0) ASSERT_EQ(pt.ideal, ceil_neg_log2(p));
    ASSERT_LE(std::labs(static_cast<long>(pt.emitted_plus_pending()) - pt.ideal), kCodeLengthSlack);
    ASSERT_LE(pt.emitted, pt.emitted_plus_pending());
  }
  EXPECT_LE(static_cast<long>(c.max_step), ceil_neg_log2(min_conditional(m, y)) + 2);
  EXPECT_LE(c.max_step, 4u);
}

TEST(Curve, SourceAndStringAgreeAndCsv) {
  const auto src = std::make_shared<ChampernowneSource>();
  const PointMassMeasure pm(src);
  const std::vector<std::size_t> cps = {1024, 2048, 3000};
  const CodeLengthCurve a = code_length_curve(pm, *src, cps);
  const CodeLengthCurve b = code_length_curve(pm, src->prefix(3000), cps);
  EXPECT_EQ(to_csv(a), to_csv(b));
  EXPECT_EQ(to_csv(a).rfind("n,L_n,l_n,L_n_pending\n", 0), 0u);
  for (const auto& pt : a.points) {
    EXPECT_EQ(pt.ideal, 1);
    EXPECT_LE(pt.emitted_plus_pending(), static_cast<std::size_t>(kCodeLengthSlack));
  }
  EXPECT_THROW((void)code_length_curve(pm, *src, {10, 5}), DomainError);
  EXPECT_THROW((void)code_length_curve(pm, src->prefix(10), {20}), DomainError);
}

}  // namespace
}  // namespace seqlab
