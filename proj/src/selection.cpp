#include "seqlab/selection.hpp"

#include <string>

#include "seqlab/error.hpp"

namespace seqlab {
namespace {

void require_same_length(const BitString& x, const BitString& y, const char* op) {
  if (x.size() != y.size()) {
    throw DomainError(std::string(op) + ": length mismatch (" + std::to_string(x.size()) +
                      " vs " + std::to_string(y.size()) + ")");
  }
}

}  // namespace

SelectionResult select(const BitString& x, const BitString& y) {
  require_same_length(x, y, "select");
  SelectionResult r;
  const std::size_t ones = y.count_ones();
  r.positions.reserve(ones);
  BitString::Builder b(ones);
  for (std::size_t i = 1; i <= y.size(); ++i) {
    if (y[i]) {
      r.positions.push_back(i);
      b.push_back(x[i]);
    }
  }
  r.selected = std::move(b).build();
  return r;
}

BitString complement(const BitString& y) { return ~y; }

std::pair<BitString, BitString> split(const BitString& x, const BitString& y) {
  require_same_length(x, y, "split");
  const std::size_t ones = y.count_ones();
  BitString::Builder picked(ones);
  BitString::Builder rest(y.size() - ones);
  for (std::size_t i = 1; i <= y.size(); ++i) (y[i] ? picked : rest).push_back(x[i]);
  return {std::move(picked).build(), std::move(rest).build()};
}

BitString merge(const BitString& a, const BitString& b, const BitString& y) {
  const std::size_t ones = y.count_ones();
  if (a.size() != ones || b.size() != y.size() - ones) {
    throw DomainError("merge: parts of length " + std::to_string(a.size()) + " and " +
                      std::to_string(b.size()) + " do not fit a selector with " +
                      std::to_string(ones) + " ones out of " + std::to_string(y.size()));
  }
  BitString::Builder x(y.size());
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 1; i <= y.size(); ++i) x.push_back(y[i] ? a[++ia] : b[++ib]);
  return std::move(x).build();
}

std::vector<std::size_t> tau_prefix(const BitString& y, std::size_t m) {
  std::vector<std::size_t> out;
  out.reserve(m);
  for (std::size_t i = 1; i <= y.size() && out.size() < m; ++i) {
    if (y[i]) out.push_back(i);
  }
  if (out.size() < m) {
    throw DomainError("tau_prefix: selector has " + std::to_string(out.size()) +
                      " ones, fewer than " + std::to_string(m));
  }
  return out;
}

}  // namespace seqlab
