#include "penney/rational.hpp"

#include <algorithm>
#include <cctype>

#include "penney/errors.hpp"

namespace penney {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) {
           return std::isdigit(c) != 0;
         });
}

BigInt to_bigint(std::string_view digits) {
  return BigInt(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const std::string_view original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty())
    raise(Errc::ParseError, "not a number: '" + std::string(original) + "'");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      raise(Errc::ParseError,
            "malformed fraction: '" + std::string(original) + "'");
    BigInt d = to_bigint(den);
    if (d == 0)
      raise(Errc::ParseError,
            "zero denominator: '" + std::string(original) + "'");
    value = Rational(to_bigint(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      raise(Errc::ParseError, "not a number: '" + std::string(original) + "'");
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      raise(Errc::ParseError,
            "malformed decimal: '" + std::string(original) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt numerator = whole.empty() ? BigInt(0) : to_bigint(whole);
    numerator *= scale;
    if (!frac.empty()) numerator += to_bigint(frac);
    value = Rational(numerator, scale);
  } else {
    if (!all_digits(s))
      raise(Errc::ParseError, "not a number: '" + std::string(original) + "'");
    value = Rational(to_bigint(s));
  }
  return negative ? -value : value;
}

std::string fraction_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string decimal_string(const Rational& value, int digits,
                           bool trim_trailing_zeros) {
  if (digits < 0) digits = 0;
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  const BigInt num = boost::multiprecision::numerator(magnitude);
  const BigInt den = boost::multiprecision::denominator(magnitude);

  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  BigInt scaled = num * scale;
  BigInt q = scaled / den;
  BigInt r = scaled % den;
  // round half to even
  const BigInt twice = r * 2;
  if (twice > den || (twice == den && q % 2 != 0)) ++q;

  std::string body = q.str();
  std::string result;
  if (digits == 0) {
    result = body;
  } else {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    result = body.substr(0, body.size() - digits) + "." +
             body.substr(body.size() - digits);
    if (trim_trailing_zeros) {
      while (result.back() == '0') result.pop_back();
      if (result.back() == '.') result.pop_back();
    }
  }
  if (negative && result.find_first_not_of("0.") != std::string::npos)
    result.insert(result.begin(), '-');
  return result;
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace penney
