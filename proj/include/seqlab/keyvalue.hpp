#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seqlab {

// Plain-text key-value record: one "key = value" per line, '#' starts a
// comment, blank lines ignored. Keys may be dotted ("x.kind") to nest one
// record inside another. Serialization is sorted by key so equal records
// produce identical text.
class KeyValueRecord {
 public:
  KeyValueRecord() = default;

  static KeyValueRecord parse(std::string_view text);
  static KeyValueRecord read_file(const std::string& path);
  std::string to_text() const;

  bool contains(const std::string& key) const { return values_.count(key) != 0; }
  // Throws UsageError when the key is missing.
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, std::string fallback) const;
  std::uint64_t get_uint(const std::string& key) const;
  std::uint64_t get_uint_or(const std::string& key, std::uint64_t fallback) const;

  KeyValueRecord& set(const std::string& key, std::string value);
  KeyValueRecord& set(const std::string& key, std::uint64_t value) {
    return set(key, std::to_string(value));
  }

  // Keys beginning with "<prefix>." with the prefix stripped.
  KeyValueRecord scoped(const std::string& prefix) const;
  // Copies every entry of `inner` under "<prefix>.".
  void merge_scoped(const std::string& prefix, const KeyValueRecord& inner);

  const std::map<std::string, std::string>& entries() const { return values_; }
  bool empty() const { return values_.empty(); }

  friend bool operator==(const KeyValueRecord&, const KeyValueRecord&) = default;

 private:
  std::map<std::string, std::string> values_;
};

std::uint64_t parse_uint(std::string_view text, std::string_view what);
// Comma/whitespace separated list of unsigned integers.
std::vector<std::uint64_t> parse_uint_list(std::string_view text, std::string_view what);

}  // namespace seqlab
