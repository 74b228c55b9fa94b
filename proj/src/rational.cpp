#include "hfsplit/rational.hpp"

#include <cctype>
#include <limits>

#include "hfsplit/errors.hpp"

namespace hfsplit {

std::string to_string(const Rational& r) {
  const BigInt den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size()) throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw InvalidInput("malformed rational: '" + std::string(whole) + "'");
    v = v * 10 + (s[pos] - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational mod_one(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  BigInt rem = num % den;
  if (rem < 0) rem += den;
  return Rational(rem, den);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("not an integer: " + to_string(r));
  const BigInt n = numerator(r);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw std::domain_error("integer overflow: " + n.str());
  return n.convert_to<std::int64_t>();
}

}  // namespace hfsplit
