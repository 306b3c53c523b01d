#include "seqlab/generators.hpp"

#include <bit>

#include "seqlab/error.hpp"

namespace seqlab {

BitString champernowne(std::size_t n) {
  BitString::Builder b(n);
  for (std::uint64_t k = 1; b.size() < n; ++k) {
    const int width = 64 - std::countl_zero(k);
    for (int j = width - 1; j >= 0 && b.size() < n; --j) b.push_back((k >> j) & 1u);
  }
  return std::move(b).build();
}

BitString fibonacci_word(std::size_t n) {
  std::vector<std::uint8_t> word{0};
  while (word.size() < n) {
    std::vector<std::uint8_t> next;
    next.reserve(word.size() * 2);
    for (std::uint8_t letter : word) {
      if (letter == 0) {
        next.push_back(0);
        next.push_back(1);
      } else {
        next.push_back(0);
      }
    }
    word = std::move(next);
  }
  BitString::Builder b(n);
  for (std::size_t i = 0; i < n; ++i) b.push_back(word[i] != 0);
  return std::move(b).build();
}

BitString sturmian(const SturmianParams& params, std::size_t n) {
  const RotationFloor floor(params.alpha, params.beta, params.coefficient_budget);
  const bool complement = params.coding == SturmianCoding::kComplement;
  BitString::Builder b(n);
  std::uint64_t prev = floor.floor_at_u64(1);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::uint64_t next = floor.floor_at_u64(i + 1);
    const bool crossing = next != prev;
    b.push_back(crossing != complement);
    prev = next;
  }
  return std::move(b).build();
}

bool draw_below(std::uint64_t u53, const Rational& p) {
  const BigInt& a = p.get_num();
  const BigInt& d = p.get_den();
  if (a.fits_ulong_p() && d.fits_ulong_p()) {
    using u128 = unsigned __int128;
    return u128{u53} * d.get_ui() < (u128{a.get_ui()} << 53);
  }
  return BigInt(static_cast<unsigned long>(u53)) * d < (a << 53);
}

BitString bernoulli_pseudo(const Rational& p, std::uint64_t seed, std::size_t n) {
  if (p < 0 || p > 1) throw DomainError("Bernoulli parameter " + to_string(p) + " outside [0,1]");
  XorShift64Star rng(seed);
  BitString::Builder b(n);
  for (std::size_t i = 0; i < n; ++i) b.push_back(draw_below(rng.next53(), p));
  return std::move(b).build();
}

BitString periodic(const BitString& pattern, std::size_t n) {
  if (pattern.empty()) throw DomainError("periodic: empty pattern");
  BitString::Builder b(n);
  while (b.size() + pattern.size() <= n) b.append(pattern);
  for (std::size_t j = 1; b.size() < n; ++j) b.push_back(pattern[j]);
  return std::move(b).build();
}

bool ChampernowneSource::bit_at(std::size_t i) const {
  if (i < 1) throw DomainError("sequence index must be >= 1");
  std::uint64_t offset = i - 1;
  unsigned width = 1;
  // numerals with `width` bits occupy width * 2^(width-1) positions
  while (offset >= (std::uint64_t{width} << (width - 1))) {
    offset -= std::uint64_t{width} << (width - 1);
    ++width;
  }
  const std::uint64_t numeral = (std::uint64_t{1} << (width - 1)) + offset / width;
  return (numeral >> (width - 1 - offset % width)) & 1u;
}

KeyValueRecord ChampernowneSource::descriptor() const {
  KeyValueRecord r;
  r.set("kind", "champernowne");
  return r;
}

bool FibonacciSource::bit_at(std::size_t i) const {
  if (i < 1) throw DomainError("sequence index must be >= 1");
  std::uint64_t m = i - 1;
  if (m == 0) return false;
  std::vector<std::uint64_t> fib{1, 2};
  while (fib.back() <= m - fib[fib.size() - 2]) fib.push_back(fib.back() + fib[fib.size() - 2]);
  std::uint64_t last = 0;
  for (auto it = fib.rbegin(); it != fib.rend(); ++it) {
    if (*it <= m) {
      m -= *it;
      last = *it;
    }
  }
  return last == 1;
}

KeyValueRecord FibonacciSource::descriptor() const {
  KeyValueRecord r;
  r.set("kind", "fibonacci");
  return r;
}

SturmianSource::SturmianSource(SturmianParams params)
    : params_(std::move(params)),
      floor_(params_.alpha, params_.beta, params_.coefficient_budget) {}

bool SturmianSource::bit_at(std::size_t i) const {
  if (i < 1) throw DomainError("sequence index must be >= 1");
  const bool crossing = floor_.floor_at(i + 1) != floor_.floor_at(i);
  return crossing != (params_.coding == SturmianCoding::kComplement);
}

KeyValueRecord SturmianSource::descriptor() const {
  KeyValueRecord r;
  r.set("kind", "sturmian")
      .set("alpha", params_.alpha.to_string())
      .set("beta", to_string(params_.beta))
      .set("coding", params_.coding == SturmianCoding::kComplement ? "complement" : "crossing")
      .set("budget", static_cast<std::uint64_t>(params_.coefficient_budget));
  return r;
}

PeriodicSource::PeriodicSource(BitString pattern) : pattern_(std::move(pattern)) {
  if (pattern_.empty()) throw DomainError("periodic: empty pattern");
}

KeyValueRecord PeriodicSource::descriptor() const {
  KeyValueRecord r;
  r.set("kind", "periodic").set("pattern", pattern_.to_text());
  return r;
}

BernoulliSource::BernoulliSource(Rational p, std::uint64_t seed) : p_(std::move(p)), seed_(seed) {
  if (p_ < 0 || p_ > 1) throw DomainError("Bernoulli parameter " + to_string(p_) + " outside [0,1]");
}

bool BernoulliSource::bit_at(std::size_t i) const {
  if (i < 1) throw DomainError("sequence index must be >= 1");
  XorShift64Star rng(seed_);
  for (std::size_t j = 1; j < i; ++j) rng.next();
  return draw_below(rng.next53(), p_);
}

KeyValueRecord BernoulliSource::descriptor() const {
  KeyValueRecord r;
  r.set("kind", "bernoulli").set("p", to_string(p_)).set("seed", seed_);
  return r;
}

SourcePtr make_source(const KeyValueRecord& d) {
  const std::string& kind = d.get("kind");
  if (kind == "constant") {
    const std::string bit = d.get_or("bit", "1");
    if (bit != "0" && bit != "1") throw UsageError("constant: bit must be 0 or 1");
    return std::make_shared<ConstantSource>(bit == "1");
  }
  if (kind == "champernowne") return std::make_shared<ChampernowneSource>();
  if (kind == "fibonacci" || kind == "fib") return std::make_shared<FibonacciSource>();
  if (kind == "sturmian") {
    SturmianParams p;
    p.alpha = ContinuedFraction::parse(d.get_or("alpha", "[0;(1)]"));
    p.beta = parse_rational(d.get_or("beta", "0"));
    const std::string coding = d.get_or("coding", "complement");
    if (coding == "complement") {
      p.coding = SturmianCoding::kComplement;
    } else if (coding == "crossing") {
      p.coding = SturmianCoding::kCrossing;
    } else {
      throw UsageError("sturmian: coding must be complement or crossing");
    }
    p.coefficient_budget = d.get_uint_or("budget", p.coefficient_budget);
    return std::make_shared<SturmianSource>(std::move(p));
  }
  if (kind == "periodic") {
    return std::make_shared<PeriodicSource>(BitString::from_text(d.get("pattern")));
  }
  if (kind == "bernoulli") {
    return std::make_shared<BernoulliSource>(parse_rational(d.get("p")), d.get_uint_or("seed", 1));
  }
  if (kind == "file") {
    const std::string& path = d.get("path");
    return std::make_shared<MaterializedSource>(
        read_sequence_file(path, parse_format(d.get_or("format", "text"))), d);
  }
  throw UsageError("unknown sequence kind '" + kind + "'");
}

}  // namespace seqlab
