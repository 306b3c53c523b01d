#include "seqlab/keyvalue.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "seqlab/error.hpp"

namespace seqlab {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

KeyValueRecord KeyValueRecord::parse(std::string_view text) {
  KeyValueRecord record;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw FormatError("line " + std::to_string(line_no) + ": empty key");
    if (record.contains(key)) {
      throw FormatError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    record.values_[key] = std::string(trim(line.substr(eq + 1)));
  }
  return record;
}

KeyValueRecord KeyValueRecord::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

std::string KeyValueRecord::to_text() const {
  std::string out;
  for (const auto& [k, v] : values_) out += k + " = " + v + "\n";
  return out;
}

const std::string& KeyValueRecord::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw UsageError("missing required key '" + key + "'");
  return it->second;
}

std::string KeyValueRecord::get_or(const std::string& key, std::string fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

std::uint64_t KeyValueRecord::get_uint(const std::string& key) const {
  return parse_uint(get(key), key);
}

std::uint64_t KeyValueRecord::get_uint_or(const std::string& key, std::uint64_t fallback) const {
  return contains(key) ? get_uint(key) : fallback;
}

KeyValueRecord& KeyValueRecord::set(const std::string& key, std::string value) {
  values_[key] = std::move(value);
  return *this;
}

KeyValueRecord KeyValueRecord::scoped(const std::string& prefix) const {
  KeyValueRecord out;
  const std::string head = prefix + ".";
  for (auto it = values_.lower_bound(head); it != values_.end(); ++it) {
    if (it->first.compare(0, head.size(), head) != 0) break;
    out.values_[it->first.substr(head.size())] = it->second;
  }
  return out;
}

void KeyValueRecord::merge_scoped(const std::string& prefix, const KeyValueRecord& inner) {
  for (const auto& [k, v] : inner.values_) values_[prefix + "." + k] = v;
}

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("expected a non-negative integer for '" + std::string(what) + "', got '" +
                     std::string(text) + "'");
  }
  return value;
}

std::vector<std::uint64_t> parse_uint_list(std::string_view text, std::string_view what) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find_first_of(", \t", pos);
    const auto token = trim(text.substr(pos, end == std::string_view::npos ? end : end - pos));
    if (!token.empty()) out.push_back(parse_uint(token, what));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace seqlab
