#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "seqlab/bitstring.hpp"
#include "seqlab/rational.hpp"

namespace seqlab {

// Largest block length the dense statistics accept (2^k counters).
inline constexpr unsigned kMaxBlockLength = 26;

// Overlapping k-block counts over the windows j = 1 .. n-k+1 of a string.
// counts[v] is the number of windows whose k bits, read as a numeral with
// the first bit most significant, equal v; zero counts are present.
struct BlockDistribution {
  unsigned k = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t windows = 0;

  Rational frequency(std::uint64_t pattern) const { return ratio(counts.at(pattern), windows); }
  // The pattern as a k-bit string.
  std::string pattern_text(std::uint64_t pattern) const;
};

// Throws DomainError unless 1 <= k <= min(|x|, kMaxBlockLength).
BlockDistribution block_freqs(const BitString& x, unsigned k);

struct Discrepancy {
  double value = 0;
  std::uint64_t witness = 0;  // lexicographically smallest maximizing pattern
};

// max over all 2^k patterns of |freq - 2^-k|.
Discrepancy discrepancy_detail(const BitString& x, unsigned k);
inline double discrepancy(const BitString& x, unsigned k) { return discrepancy_detail(x, k).value; }

// Shannon entropy (bits) of the k-block distribution divided by k.
double empirical_entropy(const BitString& x, unsigned k);
double entropy_of(const BlockDistribution& dist);

// Number of distinct k-blocks of x (1 <= k <= min(|x|, 64)). Uses a 2^k bit
// table up to kMaxBlockLength and sorting beyond it.
std::uint64_t factor_complexity(const BitString& x, unsigned k);

struct Lz78Result {
  std::uint64_t phrases = 0;
  double ratio = 0;  // phrases * (ceil(log2(phrases+1)) + 1) / |x|
};

// Incremental LZ78 parse; a trailing incomplete phrase counts as a phrase.
// Throws DomainError on empty input.
Lz78Result lz78_ratio(const BitString& x);

// count_ones(y) / |y|, exact. Throws DomainError on empty input.
Rational density(const BitString& y);

// A statistic sampled at increasing prefix lengths.
struct StatCurve {
  std::string label;
  unsigned k = 0;  // block length, 0 where not applicable
  std::vector<std::pair<std::size_t, double>> points;
};

// Rows "statistic,k,n,value" (no header). Values use 12 significant digits.
std::string to_csv_rows(const StatCurve& curve);
inline constexpr const char* kStatCsvHeader = "statistic,k,n,value\n";

// Powers of two from 2^10 up to n, plus n itself when it is not a power.
std::vector<std::size_t> default_checkpoints(std::size_t n);

}  // namespace seqlab
