#pragma once

#include <cstddef>
#include <memory>

#include "seqlab/bitstring.hpp"
#include "seqlab/keyvalue.hpp"
#include "seqlab/rational.hpp"
#include "seqlab/sequence_source.hpp"

namespace seqlab {

// A probability measure P on infinite binary sequences, given by exact
// rational conditionals. P(s) is the product of the conditionals along s, so
// P(empty) = 1 and P(s0) + P(s1) = P(s) hold identically.
class ComputableMeasure {
 public:
  virtual ~ComputableMeasure() = default;

  // P(next bit = 1 | s_1 .. s_len). Only the first `len` bits of s are read.
  virtual Rational prob_one(const BitString& s, std::size_t len) const = 0;
  virtual KeyValueRecord descriptor() const = 0;

  // P(s_i | s_1 .. s_{i-1}) for 1 <= i <= |s|.
  Rational conditional(const BitString& s, std::size_t i) const;
};

using MeasurePtr = std::shared_ptr<const ComputableMeasure>;

// i.i.d. bits with P(1) = p. Uniform is Bernoulli(1/2), reported as
// family = uniform.
class BernoulliMeasure final : public ComputableMeasure {
 public:
  explicit BernoulliMeasure(Rational p, bool uniform_alias = false);
  Rational prob_one(const BitString&, std::size_t) const override { return p_; }
  KeyValueRecord descriptor() const override;

 private:
  Rational p_;
  bool uniform_alias_;
};

// First-order Markov chain. The descriptor keeps the short names
// p00 = P(1 | previous 0), p10 = P(1 | previous 1), initial = P(first bit 1).
class Markov1Measure final : public ComputableMeasure {
 public:
  Markov1Measure(Rational one_after_zero, Rational one_after_one, Rational initial_one);
  Rational prob_one(const BitString& s, std::size_t len) const override;
  KeyValueRecord descriptor() const override;

 private:
  Rational one_after_zero_;
  Rational one_after_one_;
  Rational initial_one_;
};

// All mass on one computable sequence: conditionals are exactly 0 or 1.
class PointMassMeasure final : public ComputableMeasure {
 public:
  explicit PointMassMeasure(SourcePtr source);
  Rational prob_one(const BitString& s, std::size_t len) const override;
  KeyValueRecord descriptor() const override;

 private:
  SourcePtr source_;
};

MeasurePtr uniform_measure();

// family = uniform | bernoulli (p) | markov1 (p00, p10, initial) |
// pointmass (source.* holds a sequence descriptor, see make_source).
MeasurePtr make_measure(const KeyValueRecord& descriptor);

// P(s), exact.
Rational prob(const ComputableMeasure& measure, const BitString& s);

// Least integer l with l > -log2 P(s), i.e. the least l with a * 2^l > b for
// P(s) = a/b. When -log2 P(s) is an integer m this is m + 1. Throws
// DomainError when P(s) = 0.
long ceil_neg_log2_prob(const ComputableMeasure& measure, const BitString& s);
// The same ceiling for a given positive rational in (0, 1].
long ceil_neg_log2(const Rational& p);

inline constexpr long kDefaultTestLevelCap = 64;

// Largest n >= 0 with P(s_last | s_1 .. s_{|s|-1}) < 2^-n (strict), or `cap`
// when that conditional is exactly 0. Throws DomainError on empty s.
long conditional_test_level(const ComputableMeasure& measure, const BitString& s,
                            long cap = kDefaultTestLevelCap);

// min over 1 <= i <= |s| of P(s_i | s_1 .. s_{i-1}). Throws DomainError on
// empty s or when P(s) = 0.
Rational min_conditional(const ComputableMeasure& measure, const BitString& s);

}  // namespace seqlab
