#ifndef NRWALK_NUMERIC_HPP
#define NRWALK_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace nrw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// base^exp by repeated squaring, exp >= 0.
Rational rational_pow(const Rational& base, unsigned exp);

// Smallest integer >= q.
BigInt rational_ceil(const Rational& q);

double to_double(const Rational& q);

// Natural log; safe for values whose magnitude exceeds double range. x > 0.
double log_big(const BigInt& x);
double log_rational(const Rational& q);

// Accepts "7", "-3", "14/5" and plain decimals like "2.8" (read exactly).
Rational parse_rational(std::string_view text);

// "num/den", or just "num" when the denominator is 1.
std::string rational_string(const Rational& q);

}  // namespace nrw

#endif
