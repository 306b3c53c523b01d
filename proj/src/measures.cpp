#include "seqlab/measures.hpp"

#include <algorithm>

#include "seqlab/error.hpp"
#include "seqlab/generators.hpp"

namespace seqlab {
namespace {

void check_probability(const Rational& p, const char* what) {
  if (p < 0 || p > 1) {
    throw DomainError(std::string(what) + " = " + to_string(p) + " is not a probability");
  }
}

// a * 2^shift compared with b, for a, b > 0.
int cmp_shifted(const BigInt& a, long shift, const BigInt& b) {
  if (shift >= 0) {
    BigInt t;
    mpz_mul_2exp(t.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    return cmp(t, b);
  }
  BigInt t;
  mpz_mul_2exp(t.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  return cmp(a, t);
}

}  // namespace

Rational ComputableMeasure::conditional(const BitString& s, std::size_t i) const {
  Rational one = prob_one(s, i - 1);
  if (s[i]) return one;
  return Rational(1) - one;
}

BernoulliMeasure::BernoulliMeasure(Rational p, bool uniform_alias)
    : p_(std::move(p)), uniform_alias_(uniform_alias) {
  check_probability(p_, "bernoulli p");
}

KeyValueRecord BernoulliMeasure::descriptor() const {
  KeyValueRecord r;
  if (uniform_alias_) {
    r.set("family", "uniform");
  } else {
    r.set("family", "bernoulli").set("p", to_string(p_));
  }
  return r;
}

Markov1Measure::Markov1Measure(Rational one_after_zero, Rational one_after_one, Rational initial_one)
    : one_after_zero_(std::move(one_after_zero)),
      one_after_one_(std::move(one_after_one)),
      initial_one_(std::move(initial_one)) {
  check_probability(one_after_zero_, "markov1 p00");
  check_probability(one_after_one_, "markov1 p10");
  check_probability(initial_one_, "markov1 initial");
}

Rational Markov1Measure::prob_one(const BitString& s, std::size_t len) const {
  if (len == 0) return initial_one_;
  return s[len] ? one_after_one_ : one_after_zero_;
}

KeyValueRecord Markov1Measure::descriptor() const {
  KeyValueRecord r;
  r.set("family", "markov1")
      .set("p00", to_string(one_after_zero_))
      .set("p10", to_string(one_after_one_))
      .set("initial", to_string(initial_one_));
  return r;
}

PointMassMeasure::PointMassMeasure(SourcePtr source) : source_(std::move(source)) {
  if (!source_) throw DomainError("pointmass: null source");
}

Rational PointMassMeasure::prob_one(const BitString&, std::size_t len) const {
  return source_->bit_at(len + 1) ? 1 : 0;
}

KeyValueRecord PointMassMeasure::descriptor() const {
  KeyValueRecord r;
  r.set("family", "pointmass");
  r.merge_scoped("source", source_->descriptor());
  return r;
}

MeasurePtr uniform_measure() { return std::make_shared<BernoulliMeasure>(Rational(1, 2), true); }

MeasurePtr make_measure(const KeyValueRecord& d) {
  const std::string& family = d.get("family");
  if (family == "uniform") return uniform_measure();
  if (family == "bernoulli") return std::make_shared<BernoulliMeasure>(parse_rational(d.get("p")));
  if (family == "markov1") {
    return std::make_shared<Markov1Measure>(parse_rational(d.get("p00")),
                                            parse_rational(d.get("p10")),
                                            parse_rational(d.get_or("initial", "1/2")));
  }
  if (family == "pointmass") return std::make_shared<PointMassMeasure>(make_source(d.scoped("source")));
  throw UsageError("unknown measure family '" + family + "'");
}

Rational prob(const ComputableMeasure& measure, const BitString& s) {
  Rational p = 1;
  for (std::size_t i = 1; i <= s.size() && p != 0; ++i) p *= measure.conditional(s, i);
  return p;
}

long ceil_neg_log2(const Rational& p) {
  if (p <= 0) throw DomainError("-log2 of a zero probability");
  const BigInt& a = p.get_num();
  const BigInt& b = p.get_den();
  // a * 2^l has the bit length of b at l0; the answer is l0 or l0 + 1.
  const long l0 = static_cast<long>(bit_length(b)) - static_cast<long>(bit_length(a));
  return cmp_shifted(a, l0, b) > 0 ? l0 : l0 + 1;
}

long ceil_neg_log2_prob(const ComputableMeasure& measure, const BitString& s) {
  const Rational p = prob(measure, s);
  if (p == 0) throw DomainError("ceil_neg_log2_prob: string has probability zero");
  return ceil_neg_log2(p);
}

long conditional_test_level(const ComputableMeasure& measure, const BitString& s, long cap) {
  if (s.empty()) throw DomainError("conditional_test_level: empty string");
  const Rational c = measure.conditional(s, s.size());
  if (c == 0) return cap;
  const BigInt& a = c.get_num();
  const BigInt& b = c.get_den();
  const long n0 = static_cast<long>(bit_length(b)) - static_cast<long>(bit_length(a));
  const long n = cmp_shifted(a, n0, b) < 0 ? n0 : n0 - 1;
  return std::max(0L, n);
}

Rational min_conditional(const ComputableMeasure& measure, const BitString& s) {
  if (s.empty()) throw DomainError("min_conditional: empty string");
  Rational lowest = 1;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    Rational c = measure.conditional(s, i);
    if (c == 0) {
      throw DomainError("min_conditional: zero conditional at bit " + std::to_string(i));
    }
    if (c < lowest) lowest = std::move(c);
  }
  return lowest;
}

}  // namespace seqlab
