#pragma once

#include <cstddef>
#include <memory>

#include "seqlab/bitstring.hpp"
#include "seqlab/keyvalue.hpp"

namespace seqlab {

// A deterministic infinite binary sequence x_1 x_2 ... observed through
// indexed access. Implementations are immutable and safe to query from
// several threads.
class SequenceSource {
 public:
  virtual ~SequenceSource() = default;

  // x_i for i >= 1. The same index always yields the same bit.
  virtual bool bit_at(std::size_t i) const = 0;
  // Parameters sufficient to rebuild this source (see make_source).
  virtual KeyValueRecord descriptor() const = 0;

  // x_1 .. x_n. The default queries bit_at; generators override it with a
  // faster construction that yields the same bits.
  virtual BitString prefix(std::size_t n) const;
};

using SourcePtr = std::shared_ptr<const SequenceSource>;

// x_i = value for every i.
class ConstantSource final : public SequenceSource {
 public:
  explicit ConstantSource(bool value) : value_(value) {}
  bool bit_at(std::size_t) const override { return value_; }
  KeyValueRecord descriptor() const override;
  BitString prefix(std::size_t n) const override { return BitString::filled(n, value_); }

 private:
  bool value_;
};

// A finite string exposed as a source; indices past its end throw
// DomainError. Used for sequences read from files or generated up front.
class MaterializedSource final : public SequenceSource {
 public:
  MaterializedSource(BitString bits, KeyValueRecord descriptor)
      : bits_(std::move(bits)), descriptor_(std::move(descriptor)) {}
  bool bit_at(std::size_t i) const override { return bits_.at(i); }
  KeyValueRecord descriptor() const override { return descriptor_; }
  BitString prefix(std::size_t n) const override { return bits_.prefix(n); }
  const BitString& bits() const { return bits_; }

 private:
  BitString bits_;
  KeyValueRecord descriptor_;
};

}  // namespace seqlab
