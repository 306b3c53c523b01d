#include "seqlab/stats.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>

#include "seqlab/error.hpp"

namespace seqlab {
namespace {

void check_block_length(const BitString& x, unsigned k, unsigned limit) {
  if (k < 1 || k > x.size() || k > limit) {
    throw DomainError("block length " + std::to_string(k) + " outside [1, " +
                      std::to_string(std::min<std::size_t>(x.size(), limit)) + "]");
  }
}

// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

template <typename Visit>
void for_each_window(const BitString& x, unsigned k, Visit&& visit) {
  const std::uint64_t mask = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::uint64_t v = x.window(1, k);
  visit(v);
  for (std::size_t j = k + 1; j <= x.size(); ++j) {
    v = ((v << 1) | static_cast<std::uint64_t>(x[j])) & mask;
    visit(v);
  }
}

}  // namespace

std::string BlockDistribution::pattern_text(std::uint64_t pattern) const {
  std::string out(k, '0');
  for (unsigned b = 0; b < k; ++b) {
    if ((pattern >> (k - 1 - b)) & 1u) out[b] = '1';
  }
  return out;
}

BlockDistribution block_freqs(const BitString& x, unsigned k) {
  check_block_length(x, k, kMaxBlockLength);
  BlockDistribution d;
  d.k = k;
  d.counts.assign(std::size_t{1} << k, 0);
  d.windows = x.size() - k + 1;
  for_each_window(x, k, [&](std::uint64_t v) { ++d.counts[v]; });
  return d;
}

Discrepancy discrepancy_detail(const BitString& x, unsigned k) {
  const BlockDistribution d = block_freqs(x, k);
  // |count/W - 2^-k| = |count * 2^k - W| / (W * 2^k), compared exactly.
  std::uint64_t worst = 0;
  Discrepancy out;
  for (std::uint64_t v = 0; v < d.counts.size(); ++v) {
    const std::uint64_t scaled = d.counts[v] << k;
    const std::uint64_t dev = scaled > d.windows ? scaled - d.windows : d.windows - scaled;
    if (dev > worst || v == 0) {
      worst = dev;
      out.witness = v;
    }
  }
  out.value = std::ldexp(static_cast<double>(worst) / static_cast<double>(d.windows),
                         -static_cast<int>(k));
  return out;
}

double entropy_of(const BlockDistribution& dist) {
  CompensatedSum h;
  const double total = static_cast<double>(dist.windows);
  for (std::uint64_t c : dist.counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h.add(-p * std::log2(p));
  }
  return std::max(0.0, h.value());
}

double empirical_entropy(const BitString& x, unsigned k) {
  const double per_symbol = entropy_of(block_freqs(x, k)) / static_cast<double>(k);
  return std::min(1.0, per_symbol);
}

std::uint64_t factor_complexity(const BitString& x, unsigned k) {
  check_block_length(x, k, 64);
  if (k <= kMaxBlockLength) {
    std::vector<std::uint64_t> seen((std::size_t{1} << k) / 64 + 1, 0);
    std::uint64_t distinct = 0;
    for_each_window(x, k, [&](std::uint64_t v) {
      std::uint64_t& w = seen[v >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (v & 63);
      if (!(w & bit)) {
        w |= bit;
        ++distinct;
      }
    });
    return distinct;
  }
  std::vector<std::uint64_t> all;
  all.reserve(x.size() - k + 1);
  for_each_window(x, k, [&](std::uint64_t v) { all.push_back(v); });
  std::sort(all.begin(), all.end());
  return static_cast<std::uint64_t>(std::unique(all.begin(), all.end()) - all.begin());
}

Lz78Result lz78_ratio(const BitString& x) {
  if (x.empty()) throw DomainError("lz78_ratio: empty input");
  std::vector<std::array<std::uint32_t, 2>> trie(1, {0, 0});
  std::uint64_t phrases = 0;
  std::uint32_t node = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    const unsigned b = x[i];
    if (trie[node][b] != 0) {
      node = trie[node][b];
      continue;
    }
    trie[node][b] = static_cast<std::uint32_t>(trie.size());
    trie.push_back({0, 0});
    ++phrases;
    node = 0;
  }
  if (node != 0) ++phrases;
  Lz78Result r;
  r.phrases = phrases;
  const auto index_bits = static_cast<double>(std::bit_width(phrases));  // ceil(log2(c+1))
  r.ratio = static_cast<double>(phrases) * (index_bits + 1.0) / static_cast<double>(x.size());
  return r;
}

Rational density(const BitString& y) {
  if (y.empty()) throw DomainError("density: empty input");
  return ratio(y.count_ones(), y.size());
}

std::string to_csv_rows(const StatCurve& curve) {
  std::string out;
  char buf[64];
  for (const auto& [n, value] : curve.points) {
    std::snprintf(buf, sizeof buf, "%.12g", value);
    out += curve.label + "," + std::to_string(curve.k) + "," + std::to_string(n) + "," + buf + "\n";
  }
  return out;
}

std::vector<std::size_t> default_checkpoints(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 1024; p <= n; p *= 2) out.push_back(p);
  if (out.empty() || out.back() != n) out.push_back(n);
  return out;
}

}  // namespace seqlab
