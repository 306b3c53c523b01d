#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqlab {

// A finite binary string s = s_1 s_2 ... s_n.
//
// Positions are 1-indexed everywhere in the public API. Storage is packed
// 64 bits per word, most significant bit first, so bit i lives in word
// (i-1)/64 at bit 63-(i-1)%64. Bits past size() in the last word are zero.
//
// A BitString is a value type. Build one incrementally with
// BitString::Builder; once built it is never modified in place.
class BitString {
 public:
  class Builder;

  BitString() = default;

  // Parses '0'/'1' characters, skipping whitespace. Throws FormatError
  // naming the 0-based character offset of anything else.
  static BitString from_text(std::string_view text);

  // All-zero or all-one string of length n.
  static BitString filled(std::size_t n, bool value);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // Bit i, 1 <= i <= size(). Unchecked.
  bool operator[](std::size_t i) const noexcept {
    const std::size_t p = i - 1;
    return (words_[p >> 6] >> (63 - (p & 63))) & 1u;
  }
  // Bit i with bounds check; throws DomainError.
  bool at(std::size_t i) const;

  // Bits s_i .. s_{i+k-1} packed into the low k bits of the result, s_i most
  // significant. Requires 1 <= k <= 64 and i+k-1 <= size(). Unchecked.
  std::uint64_t window(std::size_t i, unsigned k) const noexcept;

  // s_first .. s_last inclusive; empty when last < first. Throws
  // DomainError if the range leaves [1, size()].
  BitString slice(std::size_t first, std::size_t last) const;
  // s_1 .. s_n; throws DomainError if n > size().
  BitString prefix(std::size_t n) const;
  bool is_prefix_of(const BitString& other) const noexcept;

  std::size_t count_ones() const noexcept;
  std::size_t count_zeros() const noexcept { return size_ - count_ones(); }

  // Bitwise negation.
  BitString operator~() const;

  std::string to_text() const;

  // Packed format: 8-byte little-endian bit count, then ceil(n/8) bytes with
  // bits most significant first, zero padded.
  void write_packed(std::ostream& out) const;
  static BitString read_packed(std::istream& in);

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BitString& a, const BitString& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

class BitString::Builder {
 public:
  Builder() = default;
  explicit Builder(std::size_t reserve_bits) { reserve(reserve_bits); }

  void reserve(std::size_t bits) { s_.words_.reserve((bits + 63) / 64); }

  void push_back(bool bit) {
    const std::size_t p = s_.size_++;
    if ((p & 63) == 0) s_.words_.push_back(0);
    if (bit) s_.words_.back() |= std::uint64_t{1} << (63 - (p & 63));
  }
  void append(const BitString& other);
  // Appends `count` copies of `bit`.
  void append_run(bool bit, std::size_t count);

  std::size_t size() const noexcept { return s_.size_; }
  // Read access to the bits pushed so far.
  const BitString& view() const noexcept { return s_; }

  BitString build() && { return std::move(s_); }
  BitString build() const& { return s_; }

 private:
  BitString s_;
};

std::ostream& operator<<(std::ostream& out, const BitString& s);

enum class SequenceFormat { kText, kPacked };

SequenceFormat parse_format(std::string_view name);

// File I/O in either format. Throws FormatError on malformed content and
// std::runtime_error when the file cannot be opened.
BitString read_sequence_file(const std::string& path, SequenceFormat format);
void write_sequence_file(const std::string& path, const BitString& s, SequenceFormat format);

}  // namespace seqlab
