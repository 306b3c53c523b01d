#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "seqlab/bitstring.hpp"
#include "seqlab/measures.hpp"
#include "seqlab/rational.hpp"
#include "seqlab/sequence_source.hpp"

namespace seqlab {

// Every code produced here satisfies
//   |terminated code| <= ceil_neg_log2_prob(P, y) + kCodeLengthSlack
// and, before termination,
//   |emitted + pending - ceil_neg_log2_prob(P, y)| <= kCodeLengthSlack.
inline constexpr long kCodeLengthSlack = 2;

// The interval [A/D, (A+W)/D) of an arithmetic coder in renormalized
// coordinates. All three numbers are exact integers; nothing is rounded.
struct CoderInterval {
  BigInt low = 0;    // A
  BigInt width = 1;  // W
  BigInt denom = 1;  // D

  // The affine maps applied while renormalizing.
  enum class Move {
    kNone,
    kLowerHalf,  // x -> 2x, emits 0
    kUpperHalf,  // x -> 2x - 1, emits 1
    kMiddle,     // x -> 2x - 1/2, one more straddle bit
  };

  // Restricts to the sub-interval of `bit` when P(1) = num/den (0 below 1).
  void narrow(bool bit, const BigInt& num, const BigInt& den);
  // Which move applies now (kNone when renormalization is finished).
  Move next_move() const;
  // Applies a move. kMiddle first doubles A, W and D if D is odd.
  void apply(Move move);
  // Removes common factors of two from A, W and D.
  void strip_twos();
};

// State of the monotone encoder after consuming a prefix of y.
struct CodeStream {
  BitString bits;           // emitted code bits, never rewritten later
  std::size_t pending = 0;  // straddle bits awaiting the next emission
  Rational lo;              // current interval in renormalized coordinates
  Rational hi;
  std::size_t consumed = 0;  // source bits consumed
  BitString terminated;      // bits, resolved pending bits, and flush bits
};

// Exact-rational arithmetic encoder. Emits a bit as soon as the interval
// lies in [0,1/2) or [1/2,1); intervals inside [1/4,3/4) defer one straddle
// bit. Single owner: not safe for concurrent mutation.
class ArithmeticEncoder {
 public:
  explicit ArithmeticEncoder(const ComputableMeasure& measure);

  // Consumes the next source bit. Throws DomainError naming the 1-based
  // source index when that bit has conditional probability zero.
  void push(bool bit);
  void push(const BitString& bits);

  std::size_t consumed() const { return consumed_.size(); }
  std::size_t emitted() const { return out_.size(); }
  std::size_t pending() const { return pending_; }
  const BitString& bits() const { return out_.view(); }
  const CoderInterval& interval() const { return iv_; }

  // Shortest extension that pins the current interval: emitted bits, the
  // pending bits resolved, then at most two more. Does not change state.
  BitString terminate() const;
  CodeStream stream() const;

 private:
  void emit(bool bit);

  const ComputableMeasure& measure_;
  BitString::Builder consumed_;
  BitString::Builder out_;
  std::size_t pending_ = 0;
  CoderInterval iv_;
};

// Encodes all of y. Throws DomainError if P(y) = 0.
CodeStream encode(const ComputableMeasure& measure, const BitString& y);

// The longest y (at most max_out bits) whose interval contains the whole
// cylinder of z, i.e. every infinite continuation of z decodes to an
// extension of y. Monotone: z a prefix of z' implies decode(z) is a prefix
// of decode(z').
BitString decode(const ComputableMeasure& measure, const BitString& z, std::size_t max_out);

struct CodeLengthPoint {
  std::size_t n = 0;
  std::size_t emitted = 0;  // L_n
  std::size_t pending = 0;
  long ideal = 0;  // l_n = ceil_neg_log2_prob(P, y_1^n)

  std::size_t emitted_plus_pending() const { return emitted + pending; }
};

struct CodeLengthCurve {
  std::vector<CodeLengthPoint> points;
  std::size_t max_step = 0;  // max over n of (L+pending)_{n+1} - (L+pending)_n
};

// Runs the encoder over src_1 .. src_N (N = last checkpoint) and records the
// code length at each checkpoint. l_n is tracked through an independent
// running product of conditionals. Checkpoints must be strictly increasing.
CodeLengthCurve code_length_curve(const ComputableMeasure& measure, const SequenceSource& src,
                                  const std::vector<std::size_t>& checkpoints);
CodeLengthCurve code_length_curve(const ComputableMeasure& measure, const BitString& y,
                                  const std::vector<std::size_t>& checkpoints);

// CSV with header "n,L_n,l_n,L_n_pending".
std::string to_csv(const CodeLengthCurve& curve);

}  // namespace seqlab
