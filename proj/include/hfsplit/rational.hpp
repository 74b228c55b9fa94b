#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hfsplit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& r);

/// Parses "a", "-a", "a/b". Throws InvalidInput on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Fractional part in [0, 1).
Rational mod_one(const Rational& r);

bool is_integer(const Rational& r);

/// Exact conversion; throws std::domain_error if r is not an integer or overflows.
std::int64_t to_int64(const Rational& r);

}  // namespace hfsplit
