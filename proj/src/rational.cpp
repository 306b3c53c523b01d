#include "seqlab/rational.hpp"

#include "seqlab/error.hpp"

namespace seqlab {
namespace {

bool is_decimal(std::string_view s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den) || den[0] == '-') {
    throw FormatError("expected a rational 'num/den', got '" + std::string(text) + "'");
  }
  Rational q{BigInt{std::string(num)}, BigInt{std::string(den)}};
  if (q.get_den() == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace seqlab
