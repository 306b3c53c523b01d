#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "seqlab/rational.hpp"

namespace seqlab {

// An eventually periodic simple continued fraction
//   [a0; a1, ..., am, (b1, ..., bp)]
// with the parenthesized block repeating forever. The expansion is infinite,
// so the value is a quadratic irrational. Text form: "[0;2,(1)]"; the
// brackets are optional.
class ContinuedFraction {
 public:
  ContinuedFraction(std::uint64_t integer_part, std::vector<std::uint64_t> preperiod,
                    std::vector<std::uint64_t> period);

  static ContinuedFraction parse(std::string_view text);
  std::string to_string() const;

  std::uint64_t integer_part() const { return integer_part_; }
  // a_k for k >= 1.
  std::uint64_t coefficient(std::size_t k) const;

  // Approximate value, for display only.
  double approx() const;

 private:
  std::uint64_t integer_part_;
  std::vector<std::uint64_t> preperiod_;
  std::vector<std::uint64_t> period_;
};

struct Convergent {
  BigInt p;
  BigInt q;
};

// First `count` convergents p_k/q_k, k = 0..count-1.
std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count);

// Certified evaluation of floor(i*alpha + beta) for irrational alpha in (0,1)
// given by its continued fraction and rational beta in [0,1).
//
// alpha is enclosed between consecutive convergents; a floor is returned only
// when the whole enclosure maps into one unit interval. Enclosures are
// refined one convergent at a time; running past `coefficient_budget`
// coefficients throws PrecisionError instead of guessing.
class RotationFloor {
 public:
  RotationFloor(const ContinuedFraction& alpha, Rational beta, std::size_t coefficient_budget);

  BigInt floor_at(std::uint64_t i) const;
  // Same value as floor_at when it fits; avoids big-integer arithmetic in the
  // common case.
  std::uint64_t floor_at_u64(std::uint64_t i) const;

 private:
  struct Fast {
    unsigned __int128 p;
    unsigned __int128 q;
  };

  std::size_t start_level(std::uint64_t i) const;
  bool try_fast(std::size_t level, std::uint64_t i, std::uint64_t& out) const;
  bool try_exact(std::size_t level, std::uint64_t i, BigInt& out) const;

  std::vector<Convergent> conv_;
  std::vector<Fast> fast_;          // conv_ entries small enough for 128-bit math
  std::vector<double> log2_width_;  // -log2 of the enclosure width at each level
  Rational beta_;
  std::uint64_t beta_num_ = 0;
  std::uint64_t beta_den_ = 1;
  bool beta_small_ = false;
};

}  // namespace seqlab
