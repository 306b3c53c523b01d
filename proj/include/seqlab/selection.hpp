#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "seqlab/bitstring.hpp"

namespace seqlab {

// x/y together with the selection times tau(1) < tau(2) < ... (the indices
// of the ones of y).
struct SelectionResult {
  BitString selected;
  std::vector<std::size_t> positions;
};

// x/y: the bits of x at the positions where y is 1. Requires |x| = |y|;
// throws DomainError otherwise.
SelectionResult select(const BitString& x, const BitString& y);

// The complementary selector: ybar_i = 1 iff y_i = 0.
BitString complement(const BitString& y);

// (x/y, x/ybar). The two parts interleave back into x given y (see merge).
std::pair<BitString, BitString> split(const BitString& x, const BitString& y);

// The unique x with |x| = |y|, x/y = a and x/ybar = b. Requires
// |a| = count_ones(y) and |b| = |y| - count_ones(y); throws DomainError
// otherwise.
BitString merge(const BitString& a, const BitString& b, const BitString& y);

// tau(1), ..., tau(m): the coordinates that fix the first m bits of x/y.
// Throws DomainError if y has fewer than m ones.
std::vector<std::size_t> tau_prefix(const BitString& y, std::size_t m);

}  // namespace seqlab
