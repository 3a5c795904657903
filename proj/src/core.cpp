#include "penney/core.hpp"

#include <cassert>
#include <set>

#include "penney/errors.hpp"

namespace penney {

Rational leading_payoff(const Pattern& a, const Pattern& b,
                        const Alphabet& alphabet) {
  validate_pattern(a, alphabet);
  validate_pattern(b, alphabet);

  const std::string& s = a.str();
  const std::string& t = b.str();
  Rational total = 0;
  for (std::size_t start = 0; start < s.size(); ++start) {
    const std::size_t n = s.size() - start;
    if (n > t.size()) continue;  // suffix longer than b never matches
    if (s.compare(start, n, t, 0, n) != 0) continue;
    Rational weight = 1;
    for (std::size_t i = start; i < s.size(); ++i) {
      const Rational& p = alphabet.prob(s[i]);
      if (p == 0)
        raise(Errc::ZeroProbabilityCharacter,
              std::string("overlap term crosses character '") + s[i] +
                  "' with probability zero");
      weight /= p;
    }
    total += weight;
  }
  return total;
}

BigInt conway_leading_number(const Pattern& a, const Pattern& b) {
  std::set<char> symbols(a.str().begin(), a.str().end());
  symbols.insert(b.str().begin(), b.str().end());
  if (symbols.size() > 2)
    raise(Errc::NonBinaryPattern,
          "leading number is defined for two-symbol patterns");

  const std::string& s = a.str();
  const std::string& t = b.str();
  BigInt number = 0;
  for (std::size_t start = 0; start < s.size(); ++start) {
    const std::size_t n = s.size() - start;
    if (n > t.size()) continue;
    if (s.compare(start, n, t, 0, n) == 0)
      number += BigInt(1) << (s.size() - 1 - start);
  }
  return number;
}

OddsReport odds_against(const Pattern& a, const Pattern& b,
                        const Alphabet& alphabet) {
  validate_pattern(a, alphabet);
  validate_pattern(b, alphabet);
  require_positive_probs(a, alphabet);
  require_positive_probs(b, alphabet);

  switch (classify(a, b)) {
    case Relation::Equal:
      raise(Errc::EqualPatterns, "patterns cannot precede themselves");
    case Relation::BStrictSubstringOfA:
      return {Rational(1), Rational(0), Rational(0)};
    case Relation::AStrictSubstringOfB:
      return {Rational(0), Rational(1), Rational(1)};
    case Relation::Incomparable:
      break;
  }

  const Rational aa = leading_payoff(a, a, alphabet);
  const Rational ab = leading_payoff(a, b, alphabet);
  const Rational bb = leading_payoff(b, b, alphabet);
  const Rational ba = leading_payoff(b, a, alphabet);

  OddsReport report;
  report.against = aa - ab;
  report.in_favor = bb - ba;
  const Rational total = report.against + report.in_favor;
  assert(total > 0);
  report.prob_a_first = report.in_favor / total;
  return report;
}

Rational expected_duration(const Pattern& a, const Pattern& b,
                           const Alphabet& alphabet) {
  validate_pattern(a, alphabet);
  validate_pattern(b, alphabet);
  require_positive_probs(a, alphabet);
  require_positive_probs(b, alphabet);

  switch (classify(a, b)) {
    case Relation::Equal:
    case Relation::AStrictSubstringOfB:
      // betting stops when the contained pattern occurs
      return leading_payoff(a, a, alphabet);
    case Relation::BStrictSubstringOfA:
      return leading_payoff(b, b, alphabet);
    case Relation::Incomparable:
      break;
  }

  const Rational aa = leading_payoff(a, a, alphabet);
  const Rational ab = leading_payoff(a, b, alphabet);
  const Rational bb = leading_payoff(b, b, alphabet);
  const Rational ba = leading_payoff(b, a, alphabet);
  const Rational denom = aa + bb - ab - ba;
  assert(denom > 0);
  return (aa * bb - ab * ba) / denom;
}

std::pair<BigInt, BigInt> reduced_integer_odds(const Rational& against,
                                               const Rational& in_favor) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;

  const BigInt common = lcm(denominator(against), denominator(in_favor));
  BigInt left = numerator(against) * (common / denominator(against));
  BigInt right = numerator(in_favor) * (common / denominator(in_favor));
  const BigInt divisor = gcd(left, right);
  if (divisor > 1) {
    left /= divisor;
    right /= divisor;
  }
  return {left, right};
}

}  // namespace penney
