#pragma once

#include <utility>

#include "penney/alphabet.hpp"
#include "penney/pattern.hpp"

namespace penney {

// Frequency-weighted overlap payoff between the trailing characters of `a`
// and the leading characters of `b`: the sum, over every suffix of `a` that
// equals a prefix of `b`, of the product of inverse character probabilities
// along that suffix. A suffix longer than `b` contributes zero.
//
// Interpretation: a fresh $1 bet sequence anticipating `b` starts before
// every draw; this is the total fair payout to those sequences at the moment
// a stream ends with `a`. leading_payoff(a, a) is also the expected waiting
// time for `a` alone.
//
// Accepts any pattern pair, including a == b. Throws
// ZeroProbabilityCharacter if a matched suffix crosses an impossible
// character.
Rational leading_payoff(const Pattern& a, const Pattern& b,
                        const Alphabet& alphabet);

// Classical binary leading number, computed by the digit rule: bit
// (len(a) - s) is set iff the suffix of `a` starting at position s equals a
// prefix of `b`. Deliberately shares no code with leading_payoff; under the
// fair coin  leading_payoff(a, b) == 2 * conway_leading_number(a, b)  and
// the test suite holds the two implementations against each other.
// Throws NonBinaryPattern if the two patterns use more than two distinct
// symbols.
BigInt conway_leading_number(const Pattern& a, const Pattern& b);

struct OddsReport {
  Rational against;        // chances against "a precedes b"
  Rational in_favor;       // chances in its favor
  Rational prob_a_first;   // in_favor / (against + in_favor), exact
};

// Odds against `a` occurring before `b` in the i.i.d. stream:
//   incomparable pair:  (R_a(a) - R_a(b)) : (R_b(b) - R_b(a))
//   b inside a:         1 : 0   (the contained pattern always wins)
//   a inside b:         0 : 1
// where R_x(y) = leading_payoff(x, y). Throws EqualPatterns when a == b and
// ZeroProbabilityCharacter when either pattern is impossible.
OddsReport odds_against(const Pattern& a, const Pattern& b,
                        const Alphabet& alphabet);

// Expected number of draws until the first occurrence of `a` or `b`.
// Collapses to the single-pattern waiting time leading_payoff(a, a) when
// a == b or one pattern contains the other.
Rational expected_duration(const Pattern& a, const Pattern& b,
                           const Alphabet& alphabet);

// Smallest integer ratio equal to against:in_favor, e.g. (10, 6) -> (5, 3)
// and (76/9, 20) -> (19, 45). Pairs with a zero member stay (1, 0) / (0, 1).
std::pair<BigInt, BigInt> reduced_integer_odds(const Rational& against,
                                               const Rational& in_favor);

}  // namespace penney
