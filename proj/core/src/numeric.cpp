#include "nrwalk/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace nrw {

Rational rational_pow(const Rational& base, unsigned exp) {
  using boost::multiprecision::pow;
  if (exp == 0) return Rational(1);
  BigInt num = pow(numerator(base), exp);
  BigInt den = pow(denominator(base), exp);
  return Rational(num, den);
}

BigInt rational_ceil(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);  // always > 0
  BigInt quot = num / den;      // truncates toward zero
  if (num % den != 0 && num > 0) ++quot;
  return quot;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_big: argument must be positive");
  // Doubles hold integers up to ~1e308; msb < 1000 is comfortably inside.
  if (boost::multiprecision::msb(x) < 1000) return std::log(x.convert_to<double>());
  const unsigned k = boost::multiprecision::msb(x);
  const unsigned shift = k - 62;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * M_LN2;
}

double log_rational(const Rational& q) {
  return log_big(numerator(q)) - log_big(denominator(q));
}

namespace {

BigInt parse_digits(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("expected digits");
  BigInt value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("invalid digit in number");
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(text.substr(0, slash));
    BigInt den = parse_digits(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    value = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    BigInt num = whole.empty() ? BigInt(0) : parse_digits(whole);
    BigInt den = 1;
    for (char c : frac) {
      if (c < '0' || c > '9') throw std::invalid_argument("invalid digit in number");
      num = num * 10 + (c - '0');
      den *= 10;
    }
    value = Rational(num, den);
  } else {
    value = Rational(parse_digits(text));
  }
  return negative ? -value : value;
}

std::string rational_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

}  // namespace nrw
