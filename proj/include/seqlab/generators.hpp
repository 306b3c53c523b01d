#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>

#include "seqlab/bitstring.hpp"
#include "seqlab/continued_fraction.hpp"
#include "seqlab/keyvalue.hpp"
#include "seqlab/rational.hpp"
#include "seqlab/sequence_source.hpp"

namespace seqlab {

// Binary numerals of 1, 2, 3, ... concatenated: 1 10 11 100 101 ...
BitString champernowne(std::size_t n);

// Fixed point of the substitution 0 -> 01, 1 -> 0, built by applying the
// substitution until the word is long enough.
BitString fibonacci_word(std::size_t n);

// How a rotation crossing is written as a letter.
enum class SturmianCoding {
  // bit i = floor((i+1)a + b) - floor(i a + b); ones have density a.
  kCrossing,
  // bit i = 1 - (floor((i+1)a + b) - floor(i a + b)); ones have density 1-a.
  // With a = [0;(1)] and b = 0 this is the Fibonacci word.
  kComplement,
};

struct SturmianParams {
  ContinuedFraction alpha{0, {}, {1}};
  Rational beta = 0;
  SturmianCoding coding = SturmianCoding::kComplement;
  std::size_t coefficient_budget = 256;
};

// Rotation word x_1..x_n with every floor certified by convergent enclosures
// of alpha. Throws PrecisionError when the budget is exhausted.
BitString sturmian(const SturmianParams& params, std::size_t n);

// xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D). Seed 0 is
// replaced by kZeroSeedState since the all-zero state is a fixed point.
class XorShift64Star {
 public:
  static constexpr std::uint64_t kZeroSeedState = 0x9E3779B97F4A7C15ull;

  explicit XorShift64Star(std::uint64_t seed) : state_(seed == 0 ? kZeroSeedState : seed) {}

  std::uint64_t next() noexcept {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }
  // Top 53 bits of the next draw, i.e. the draw scaled to [0,1) times 2^53.
  std::uint64_t next53() noexcept { return next() >> 11; }

 private:
  std::uint64_t state_;
};

// Is u / 2^53 < p exactly? Requires 0 <= p <= 1.
bool draw_below(std::uint64_t u53, const Rational& p);

// Bit i is 1 iff the i-th draw of XorShift64Star(seed), reduced to [0,1) by
// its top 53 bits, is < p. Throws DomainError unless 0 <= p <= 1.
BitString bernoulli_pseudo(const Rational& p, std::uint64_t seed, std::size_t n);

// pattern repeated and cut to n bits. Throws DomainError on an empty pattern.
BitString periodic(const BitString& pattern, std::size_t n);

class ChampernowneSource final : public SequenceSource {
 public:
  bool bit_at(std::size_t i) const override;
  KeyValueRecord descriptor() const override;
  BitString prefix(std::size_t n) const override { return champernowne(n); }
};

// Letter i of the Fibonacci word read off the Zeckendorf representation of
// i-1 (1 iff its lowest Fibonacci digit is set), independent of both the
// substitution and the rotation constructions.
class FibonacciSource final : public SequenceSource {
 public:
  bool bit_at(std::size_t i) const override;
  KeyValueRecord descriptor() const override;
  BitString prefix(std::size_t n) const override { return fibonacci_word(n); }
};

class SturmianSource final : public SequenceSource {
 public:
  explicit SturmianSource(SturmianParams params);
  bool bit_at(std::size_t i) const override;
  KeyValueRecord descriptor() const override;
  BitString prefix(std::size_t n) const override { return sturmian(params_, n); }

 private:
  SturmianParams params_;
  RotationFloor floor_;
};

class PeriodicSource final : public SequenceSource {
 public:
  explicit PeriodicSource(BitString pattern);
  bool bit_at(std::size_t i) const override { return pattern_[(i - 1) % pattern_.size() + 1]; }
  KeyValueRecord descriptor() const override;
  BitString prefix(std::size_t n) const override { return periodic(pattern_, n); }

 private:
  BitString pattern_;
};

// Pseudorandom Bernoulli(p) bits. Random access replays the generator, so
// bit_at is O(i); prefer prefix().
class BernoulliSource final : public SequenceSource {
 public:
  BernoulliSource(Rational p, std::uint64_t seed);
  bool bit_at(std::size_t i) const override;
  KeyValueRecord descriptor() const override;
  BitString prefix(std::size_t n) const override { return bernoulli_pseudo(p_, seed_, n); }

 private:
  Rational p_;
  std::uint64_t seed_;
};

// Builds a source from a descriptor record. Recognized kinds:
//   constant   bit=0|1
//   champernowne
//   fibonacci
//   sturmian   alpha=[0;...,(...)] beta=num/den coding=complement|crossing budget=N
//   periodic   pattern=0101
//   bernoulli  p=num/den seed=N
//   file       path=... format=text|packed
// Throws UsageError or FormatError on bad parameters.
SourcePtr make_source(const KeyValueRecord& descriptor);

}  // namespace seqlab
