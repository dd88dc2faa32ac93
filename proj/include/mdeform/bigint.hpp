#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace mdeform {

/// Arbitrary-precision integer. Expression templates are off so that `auto`
/// always holds a value.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Arbitrary-precision rational, always kept in lowest terms with den > 0.
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

BigInt parse_bigint(std::string_view text);
BigRational parse_rational(std::string_view text);  // "r/s" or "n"

std::string to_string(const BigInt& value);
std::string to_string(const BigRational& value);

inline BigInt numerator_of(const BigRational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator_of(const BigRational& x) { return boost::multiprecision::denominator(x); }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace mdeform
