#include "seqlab/coder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "seqlab/error.hpp"

namespace seqlab {
namespace {

BigInt shifted(const BigInt& v, mp_bitcnt_t bits) {
  BigInt out;
  mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), bits);
  return out;
}

// Integer value of z read as a binary numeral, z_1 most significant.
BigInt numeral_value(const BitString& z) {
  BigInt v = 0;
  if (z.empty()) return v;
  const auto words = z.words();
  mpz_import(v.get_mpz_t(), words.size(), 1, sizeof(std::uint64_t), 0, 0, words.data());
  mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), 64 * words.size() - z.size());
  return v;
}

// The cylinder of the code prefix being decoded, [lo, lo + w), tracked in the
// coordinates of a CoderInterval with denominator D as
//   lo * D = C + F / 2^q  (0 <= F < 2^q),   w * D = Wc / 2^q.
// q stays fixed at the code length; every update is linear in operand size.
struct CodeWindow {
  BigInt c;
  BigInt f;
  BigInt wc = 1;
  mp_bitcnt_t q = 0;

  // D -> D * factor.
  void scale(const BigInt& factor) {
    BigInt t = f * factor;
    BigInt carry;
    mpz_fdiv_q_2exp(carry.get_mpz_t(), t.get_mpz_t(), q);
    mpz_fdiv_r_2exp(f.get_mpz_t(), t.get_mpz_t(), q);
    c = c * factor + carry;
    wc *= factor;
  }

  // Every coordinate doubles (x -> 2x, or D -> 2D with the point fixed).
  void twice() {
    const int top = q > 0 ? mpz_tstbit(f.get_mpz_t(), q - 1) : 0;
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), 1);
    if (top) c += 1;
    mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), 1);
    if (q > 0) mpz_fdiv_r_2exp(f.get_mpz_t(), f.get_mpz_t(), q);
    mpz_mul_2exp(wc.get_mpz_t(), wc.get_mpz_t(), 1);
  }

  // Is [lo, lo + w) inside [left/D, right/D)?
  bool inside(const BigInt& left, const BigInt& right) const {
    if (c < left) return false;
    const BigInt room = right - c;
    if (sgn(room) <= 0) return false;
    return f + wc <= shifted(room, q);
  }
};

}  // namespace

void CoderInterval::narrow(bool bit, const BigInt& num, const BigInt& den) {
  BigInt zero_part = width * (den - num);
  low *= den;
  denom *= den;
  if (bit) {
    low += zero_part;
    width *= num;
  } else {
    width = std::move(zero_part);
  }
}

CoderInterval::Move CoderInterval::next_move() const {
  const BigInt high = low + width;
  if (shifted(high, 1) <= denom) return Move::kLowerHalf;
  if (shifted(low, 1) >= denom) return Move::kUpperHalf;
  if (shifted(low, 2) >= denom && shifted(high, 2) <= 3 * denom) return Move::kMiddle;
  return Move::kNone;
}

void CoderInterval::apply(Move move) {
  switch (move) {
    case Move::kNone:
      return;
    case Move::kLowerHalf:
      mpz_mul_2exp(low.get_mpz_t(), low.get_mpz_t(), 1);
      break;
    case Move::kUpperHalf:
      mpz_mul_2exp(low.get_mpz_t(), low.get_mpz_t(), 1);
      low -= denom;
      break;
    case Move::kMiddle: {
      if (mpz_odd_p(denom.get_mpz_t())) {
        mpz_mul_2exp(low.get_mpz_t(), low.get_mpz_t(), 1);
        mpz_mul_2exp(width.get_mpz_t(), width.get_mpz_t(), 1);
        mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), 1);
      }
      BigInt half;
      mpz_fdiv_q_2exp(half.get_mpz_t(), denom.get_mpz_t(), 1);
      mpz_mul_2exp(low.get_mpz_t(), low.get_mpz_t(), 1);
      low -= half;
      break;
    }
  }
  mpz_mul_2exp(width.get_mpz_t(), width.get_mpz_t(), 1);
}

void CoderInterval::strip_twos() {
  mp_bitcnt_t tz = std::min(mpz_scan1(width.get_mpz_t(), 0), mpz_scan1(denom.get_mpz_t(), 0));
  if (sgn(low) != 0) tz = std::min(tz, mpz_scan1(low.get_mpz_t(), 0));
  if (tz == 0) return;
  mpz_fdiv_q_2exp(low.get_mpz_t(), low.get_mpz_t(), tz);
  mpz_fdiv_q_2exp(width.get_mpz_t(), width.get_mpz_t(), tz);
  mpz_fdiv_q_2exp(denom.get_mpz_t(), denom.get_mpz_t(), tz);
}

ArithmeticEncoder::ArithmeticEncoder(const ComputableMeasure& measure) : measure_(measure) {}

void ArithmeticEncoder::emit(bool bit) {
  out_.push_back(bit);
  out_.append_run(!bit, pending_);
  pending_ = 0;
}

void ArithmeticEncoder::push(bool bit) {
  const Rational one = measure_.prob_one(consumed_.view(), consumed_.size());
  if ((bit && one == 0) || (!bit && one == 1)) {
    throw DomainError("encode: source bit " + std::to_string(consumed_.size() + 1) +
                      " has probability zero");
  }
  iv_.narrow(bit, one.get_num(), one.get_den());
  consumed_.push_back(bit);
  for (auto move = iv_.next_move(); move != CoderInterval::Move::kNone; move = iv_.next_move()) {
    if (move == CoderInterval::Move::kLowerHalf) {
      emit(false);
    } else if (move == CoderInterval::Move::kUpperHalf) {
      emit(true);
    } else {
      ++pending_;
    }
    iv_.apply(move);
  }
  iv_.strip_twos();
}

void ArithmeticEncoder::push(const BitString& bits) {
  for (std::size_t i = 1; i <= bits.size(); ++i) push(bits[i]);
}

BitString ArithmeticEncoder::terminate() const {
  const BigInt high = iv_.low + iv_.width;
  for (unsigned m = pending_ > 0 ? 1 : 0; m <= 2; ++m) {
    const BigInt lo_scaled = shifted(iv_.low, m);
    const BigInt hi_scaled = shifted(high, m);
    for (unsigned long j = 0; j < (1ul << m); ++j) {
      // [j/2^m, (j+1)/2^m) inside [A/D, (A+W)/D)?
      if (j * iv_.denom < lo_scaled || (j + 1) * iv_.denom > hi_scaled) continue;
      BitString::Builder b = out_;
      if (m > 0) {
        const bool first = (j >> (m - 1)) & 1u;
        b.push_back(first);
        b.append_run(!first, pending_);
        for (unsigned r = m - 1; r-- > 0;) b.push_back((j >> r) & 1u);
      }
      return std::move(b).build();
    }
  }
  throw std::logic_error("arithmetic coder interval not renormalized");
}

CodeStream ArithmeticEncoder::stream() const {
  CodeStream s;
  s.bits = out_.view();
  s.pending = pending_;
  s.lo = Rational(iv_.low, iv_.denom);
  s.hi = Rational(iv_.low + iv_.width, iv_.denom);
  s.lo.canonicalize();
  s.hi.canonicalize();
  s.consumed = consumed_.size();
  s.terminated = terminate();
  return s;
}

CodeStream encode(const ComputableMeasure& measure, const BitString& y) {
  ArithmeticEncoder enc(measure);
  enc.push(y);
  return enc.stream();
}

BitString decode(const ComputableMeasure& measure, const BitString& z, std::size_t max_out) {
  CoderInterval iv;
  CodeWindow code;
  code.f = numeral_value(z);
  code.q = z.size();
  BitString::Builder out;

  while (out.size() < max_out) {
    const Rational one = measure.prob_one(out.view(), out.size());
    const BigInt& num = one.get_num();
    const BigInt& den = one.get_den();
    CodeWindow scaled = code;
    scaled.scale(den);
    const BigInt left = iv.low * den;
    const BigInt split = left + iv.width * (den - num);
    const BigInt right = left + iv.width * den;
    bool bit = false;
    if (scaled.inside(left, split)) {
      bit = false;
    } else if (scaled.inside(split, right)) {
      bit = true;
    } else {
      break;
    }
    code = std::move(scaled);
    iv.narrow(bit, num, den);
    out.push_back(bit);
    for (auto move = iv.next_move(); move != CoderInterval::Move::kNone; move = iv.next_move()) {
      if (move == CoderInterval::Move::kMiddle && mpz_odd_p(iv.denom.get_mpz_t())) code.twice();
      iv.apply(move);
      code.twice();
      if (move == CoderInterval::Move::kUpperHalf) {
        code.c -= iv.denom;
      } else if (move == CoderInterval::Move::kMiddle) {
        BigInt half;
        mpz_fdiv_q_2exp(half.get_mpz_t(), iv.denom.get_mpz_t(), 1);
        code.c -= half;
      }
    }
  }
  return std::move(out).build();
}

CodeLengthCurve code_length_curve(const ComputableMeasure& measure, const BitString& y,
                                  const std::vector<std::size_t>& checkpoints) {
  for (std::size_t j = 1; j < checkpoints.size(); ++j) {
    if (checkpoints[j] <= checkpoints[j - 1]) {
      throw DomainError("checkpoints must be strictly increasing");
    }
  }
  CodeLengthCurve curve;
  if (checkpoints.empty()) return curve;
  if (checkpoints.back() > y.size()) {
    throw DomainError("checkpoint " + std::to_string(checkpoints.back()) + " beyond sequence length " +
                      std::to_string(y.size()));
  }
  ArithmeticEncoder enc(measure);
  Rational p = 1;
  std::size_t next = 0;
  std::size_t prev_total = 0;
  if (checkpoints[0] == 0) {
    curve.points.push_back({0, 0, 0, ceil_neg_log2(p)});
    ++next;
  }
  for (std::size_t i = 1; next < checkpoints.size(); ++i) {
    enc.push(y[i]);
    p *= measure.conditional(y, i);
    const std::size_t total = enc.emitted() + enc.pending();
    curve.max_step = std::max(curve.max_step, total - prev_total);
    prev_total = total;
    if (i == checkpoints[next]) {
      curve.points.push_back({i, enc.emitted(), enc.pending(), ceil_neg_log2(p)});
      ++next;
    }
  }
  return curve;
}

CodeLengthCurve code_length_curve(const ComputableMeasure& measure, const SequenceSource& src,
                                  const std::vector<std::size_t>& checkpoints) {
  const std::size_t horizon = checkpoints.empty() ? 0 : checkpoints.back();
  return code_length_curve(measure, src.prefix(horizon), checkpoints);
}

std::string to_csv(const CodeLengthCurve& curve) {
  std::ostringstream out;
  out << "n,L_n,l_n,L_n_pending\n";
  for (const auto& pt : curve.points) {
    out << pt.n << ',' << pt.emitted << ',' << pt.ideal << ',' << pt.emitted_plus_pending() << '\n';
  }
  return out.str();
}

}  // namespace seqlab
