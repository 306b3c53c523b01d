#include "seqlab/continued_fraction.hpp"

#include <algorithm>
#include <cmath>

#include "seqlab/error.hpp"
#include "seqlab/keyvalue.hpp"

namespace seqlab {
namespace {

constexpr unsigned kFastBits = 40;
constexpr std::uint64_t kFastLimit = std::uint64_t{1} << kFastBits;

double log2_big(const BigInt& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

void check_coefficients(const std::vector<std::uint64_t>& cs) {
  for (std::uint64_t c : cs) {
    if (c == 0) throw DomainError("continued fraction coefficients must be positive");
  }
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::uint64_t integer_part,
                                     std::vector<std::uint64_t> preperiod,
                                     std::vector<std::uint64_t> period)
    : integer_part_(integer_part), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) {
    throw DomainError("continued fraction needs a nonempty repeating block (value must be irrational)");
  }
  check_coefficients(preperiod_);
  check_coefficients(period_);
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '[' && c != ']') s += c;
  }
  const auto semi = s.find(';');
  const auto open = s.find('(');
  const auto close = s.find(')');
  if (semi == std::string::npos || open == std::string::npos || close == std::string::npos ||
      open < semi || close < open || close + 1 != s.size()) {
    throw FormatError("continued fraction must look like [a0;a1,...,(b1,...)], got '" +
                      std::string(text) + "'");
  }
  try {
    const std::uint64_t a0 = parse_uint(s.substr(0, semi), "a0");
    const auto pre = parse_uint_list(s.substr(semi + 1, open - semi - 1), "coefficient");
    const auto per = parse_uint_list(s.substr(open + 1, close - open - 1), "coefficient");
    return ContinuedFraction(a0, pre, per);
  } catch (const UsageError& e) {
    throw FormatError(std::string("continued fraction: ") + e.what());
  }
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[" + std::to_string(integer_part_) + ";";
  for (std::uint64_t c : preperiod_) out += std::to_string(c) + ",";
  out += "(";
  for (std::size_t j = 0; j < period_.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(period_[j]);
  }
  return out + ")]";
}

std::uint64_t ContinuedFraction::coefficient(std::size_t k) const {
  if (k == 0) return integer_part_;
  if (k <= preperiod_.size()) return preperiod_[k - 1];
  return period_[(k - 1 - preperiod_.size()) % period_.size()];
}

double ContinuedFraction::approx() const {
  double x = 0;
  for (std::size_t k = 40; k >= 1; --k) x = 1.0 / (static_cast<double>(coefficient(k)) + x);
  return static_cast<double>(integer_part_) + x;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf, std::size_t count) {
  std::vector<Convergent> out;
  out.reserve(count);
  BigInt p_prev = 1, q_prev = 0;
  BigInt p = cf.integer_part(), q = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      const BigInt a = static_cast<unsigned long>(cf.coefficient(k));
      BigInt p_next = a * p + p_prev;
      BigInt q_next = a * q + q_prev;
      p_prev = std::move(p);
      q_prev = std::move(q);
      p = std::move(p_next);
      q = std::move(q_next);
    }
    out.push_back({p, q});
  }
  return out;
}

RotationFloor::RotationFloor(const ContinuedFraction& alpha, Rational beta,
                             std::size_t coefficient_budget)
    : beta_(std::move(beta)) {
  if (alpha.integer_part() != 0) throw DomainError("rotation parameter must lie in (0,1)");
  if (beta_ < 0 || beta_ >= 1) throw DomainError("rotation offset must lie in [0,1)");
  if (coefficient_budget < 2) throw DomainError("coefficient budget must be at least 2");
  conv_ = convergents(alpha, coefficient_budget + 1);
  for (const auto& c : conv_) {
    if (c.q >= kFastLimit) break;
    fast_.push_back({c.p.get_ui(), c.q.get_ui()});
  }
  for (std::size_t k = 0; k + 1 < conv_.size(); ++k) {
    log2_width_.push_back(log2_big(conv_[k].q) + log2_big(conv_[k + 1].q));
  }
  if (beta_.get_den() < kFastLimit) {
    beta_small_ = true;
    beta_num_ = beta_.get_num().get_ui();
    beta_den_ = beta_.get_den().get_ui();
  }
}

std::size_t RotationFloor::start_level(std::uint64_t i) const {
  const double need = std::log2(static_cast<double>(i) + 1.0) + 8.0;
  const auto it = std::lower_bound(log2_width_.begin(), log2_width_.end(), need);
  const auto level = static_cast<std::size_t>(it - log2_width_.begin());
  return std::min(level, log2_width_.size() - 1);
}

// floor(i*lo + beta) = m with i*hi + beta <= m + 1, where lo and hi are the
// convergents at `level` and `level`+1 in increasing order.
bool RotationFloor::try_fast(std::size_t level, std::uint64_t i, std::uint64_t& out) const {
  if (level + 1 >= fast_.size() || !beta_small_ || i >= kFastLimit) return false;
  const Fast* lo = &fast_[level];
  const Fast* hi = &fast_[level + 1];
  if (level % 2 == 1) std::swap(lo, hi);  // odd convergents lie above alpha
  using u128 = unsigned __int128;
  const u128 bd = beta_den_, bn = beta_num_, ii = i;
  const u128 x_lo = ii * lo->p * bd + bn * lo->q;
  const u128 y_lo = lo->q * bd;
  const u128 m = x_lo / y_lo;
  const u128 x_hi = ii * hi->p * bd + bn * hi->q;
  const u128 y_hi = hi->q * bd;
  if (x_hi > (m + 1) * y_hi) return false;
  out = static_cast<std::uint64_t>(m);
  return true;
}

bool RotationFloor::try_exact(std::size_t level, std::uint64_t i, BigInt& out) const {
  const Convergent* lo = &conv_[level];
  const Convergent* hi = &conv_[level + 1];
  if (level % 2 == 1) std::swap(lo, hi);
  const BigInt ii = static_cast<unsigned long>(i);
  const BigInt& bn = beta_.get_num();
  const BigInt& bd = beta_.get_den();
  const BigInt x_lo = ii * lo->p * bd + bn * lo->q;
  const BigInt y_lo = lo->q * bd;
  BigInt m;
  mpz_fdiv_q(m.get_mpz_t(), x_lo.get_mpz_t(), y_lo.get_mpz_t());
  const BigInt x_hi = ii * hi->p * bd + bn * hi->q;
  if (x_hi > (m + 1) * (hi->q * bd)) return false;
  out = m;
  return true;
}

BigInt RotationFloor::floor_at(std::uint64_t i) const {
  if (i == 0) return 0;  // beta in [0,1)
  for (std::size_t level = start_level(i); level + 1 < conv_.size(); ++level) {
    std::uint64_t fast = 0;
    if (try_fast(level, i, fast)) return BigInt(static_cast<unsigned long>(fast));
    BigInt exact;
    if (try_exact(level, i, exact)) return exact;
  }
  throw PrecisionError("floor(" + std::to_string(i) +
                       "*alpha + beta) undecided within the coefficient budget of " +
                       std::to_string(conv_.size() - 1));
}

std::uint64_t RotationFloor::floor_at_u64(std::uint64_t i) const {
  if (i == 0) return 0;
  const std::size_t start = start_level(i);
  for (std::size_t level = start; level + 1 < fast_.size(); ++level) {
    std::uint64_t out = 0;
    if (try_fast(level, i, out)) return out;
  }
  return floor_at(i).get_ui();
}

}  // namespace seqlab
