#include "seqlab/bitstring.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab {
namespace {

constexpr std::uint64_t kAllOnes = ~std::uint64_t{0};

// Mask keeping the first `bits` (1..64) most significant bits of a word.
constexpr std::uint64_t high_mask(std::size_t bits) {
  return bits >= 64 ? kAllOnes : ~(kAllOnes >> bits);
}

bool is_space(char c) {
  return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\v' || c == '\f';
}

}  // namespace

BitString BitString::from_text(std::string_view text) {
  Builder b(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '0' || c == '1') {
      b.push_back(c == '1');
    } else if (!is_space(c)) {
      std::ostringstream msg;
      msg << "invalid character '" << c << "' at offset " << pos << " in bit string";
      throw FormatError(msg.str());
    }
  }
  return std::move(b).build();
}

BitString BitString::filled(std::size_t n, bool value) {
  BitString s;
  s.size_ = n;
  s.words_.assign((n + 63) / 64, value ? kAllOnes : 0);
  if (value && (n & 63) != 0) s.words_.back() &= high_mask(n & 63);
  return s;
}

bool BitString::at(std::size_t i) const {
  if (i < 1 || i > size_) {
    throw DomainError("bit index " + std::to_string(i) + " outside [1, " +
                      std::to_string(size_) + "]");
  }
  return (*this)[i];
}

std::uint64_t BitString::window(std::size_t i, unsigned k) const noexcept {
  const std::size_t p = i - 1;
  const std::size_t w = p >> 6;
  const unsigned off = p & 63;
  std::uint64_t v = words_[w] << off;
  if (off + k > 64) v |= words_[w + 1] >> (64 - off);
  return k == 64 ? v : v >> (64 - k);
}

BitString BitString::slice(std::size_t first, std::size_t last) const {
  if (last < first) return {};
  if (first < 1 || last > size_) {
    throw DomainError("slice [" + std::to_string(first) + ", " + std::to_string(last) +
                      "] outside [1, " + std::to_string(size_) + "]");
  }
  const std::size_t n = last - first + 1;
  BitString out;
  out.size_ = n;
  out.words_.resize((n + 63) / 64);
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    const std::size_t start = first + 64 * w;
    const unsigned k = static_cast<unsigned>(std::min<std::size_t>(64, n - 64 * w));
    out.words_[w] = k == 64 ? window(start, 64) : window(start, k) << (64 - k);
  }
  return out;
}

BitString BitString::prefix(std::size_t n) const {
  if (n > size_) {
    throw DomainError("prefix length " + std::to_string(n) + " exceeds " + std::to_string(size_));
  }
  BitString out;
  out.size_ = n;
  out.words_.assign(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>((n + 63) / 64));
  if ((n & 63) != 0) out.words_.back() &= high_mask(n & 63);
  return out;
}

bool BitString::is_prefix_of(const BitString& other) const noexcept {
  if (size_ > other.size_) return false;
  const std::size_t full = size_ / 64;
  for (std::size_t w = 0; w < full; ++w) {
    if (words_[w] != other.words_[w]) return false;
  }
  if ((size_ & 63) == 0) return true;
  return words_[full] == (other.words_[full] & high_mask(size_ & 63));
}

std::size_t BitString::count_ones() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitString BitString::operator~() const {
  BitString out;
  out.size_ = size_;
  out.words_.resize(words_.size());
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
  if ((size_ & 63) != 0) out.words_.back() &= high_mask(size_ & 63);
  return out;
}

std::string BitString::to_text() const {
  std::string out(size_, '0');
  for (std::size_t i = 1; i <= size_; ++i) {
    if ((*this)[i]) out[i - 1] = '1';
  }
  return out;
}

void BitString::write_packed(std::ostream& out) const {
  std::uint64_t n = size_;
  char header[8];
  for (int b = 0; b < 8; ++b) header[b] = static_cast<char>((n >> (8 * b)) & 0xff);
  out.write(header, 8);
  const std::size_t nbytes = (size_ + 7) / 8;
  std::string body(nbytes, '\0');
  for (std::size_t j = 0; j < nbytes; ++j) {
    body[j] = static_cast<char>((words_[j / 8] >> (56 - 8 * (j % 8))) & 0xff);
  }
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
}

BitString BitString::read_packed(std::istream& in) {
  unsigned char header[8];
  if (!in.read(reinterpret_cast<char*>(header), 8)) {
    throw FormatError("packed sequence: truncated length header");
  }
  std::uint64_t n = 0;
  for (int b = 7; b >= 0; --b) n = (n << 8) | header[b];
  const std::size_t nbytes = (n + 7) / 8;
  std::string body(nbytes, '\0');
  if (!in.read(body.data(), static_cast<std::streamsize>(nbytes))) {
    throw FormatError("packed sequence: expected " + std::to_string(nbytes) + " payload bytes");
  }
  BitString s;
  s.size_ = n;
  s.words_.assign((n + 63) / 64, 0);
  for (std::size_t j = 0; j < nbytes; ++j) {
    s.words_[j / 8] |= std::uint64_t{static_cast<unsigned char>(body[j])} << (56 - 8 * (j % 8));
  }
  if ((n & 63) != 0 && (s.words_.back() & ~high_mask(n & 63)) != 0) {
    throw FormatError("packed sequence: nonzero padding bits");
  }
  return s;
}

void BitString::Builder::append(const BitString& other) {
  // Fast path when we are word aligned.
  if ((s_.size_ & 63) == 0) {
    s_.words_.insert(s_.words_.end(), other.words_.begin(), other.words_.end());
    s_.size_ += other.size_;
    return;
  }
  for (std::size_t i = 1; i <= other.size(); ++i) push_back(other[i]);
}

void BitString::Builder::append_run(bool bit, std::size_t count) {
  for (; count > 0 && (s_.size_ & 63) != 0; --count) push_back(bit);
  for (; count >= 64; count -= 64) {
    s_.words_.push_back(bit ? kAllOnes : 0);
    s_.size_ += 64;
  }
  for (; count > 0; --count) push_back(bit);
}

std::ostream& operator<<(std::ostream& out, const BitString& s) { return out << s.to_text(); }

SequenceFormat parse_format(std::string_view name) {
  if (name == "text") return SequenceFormat::kText;
  if (name == "packed") return SequenceFormat::kPacked;
  throw UsageError("unknown sequence format '" + std::string(name) + "' (expected text|packed)");
}

BitString read_sequence_file(const std::string& path, SequenceFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  if (format == SequenceFormat::kPacked) return BitString::read_packed(in);
  std::ostringstream text;
  text << in.rdbuf();
  return BitString::from_text(text.str());
}

void write_sequence_file(const std::string& path, const BitString& s, SequenceFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (format == SequenceFormat::kPacked) {
    s.write_packed(out);
  } else {
    out << s.to_text() << '\n';
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace seqlab
