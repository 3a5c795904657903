#include "penney/solver.hpp"

#include <string>

#include "penney/errors.hpp"

namespace penney {

namespace {

// Anything past this is no longer a desk-scale enumeration.
constexpr std::size_t kMaxPatternCount = std::size_t(1) << 22;

}  // namespace

PatternSet enumerate_patterns(std::size_t k, const Alphabet& alphabet,
                              std::size_t cap) {
  if (k == 0) raise(Errc::InvalidArgument, "pattern length must be positive");
  if (k > cap)
    raise(Errc::EnumerationTooLarge,
          "length " + std::to_string(k) + " exceeds the enumeration cap of " +
              std::to_string(cap));

  const std::size_t m = alphabet.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > kMaxPatternCount / m)
      raise(Errc::EnumerationTooLarge,
            "enumeration would produce too many patterns");
    count *= m;
  }

  PatternSet set;
  set.length = k;
  set.patterns.reserve(count);
  std::string current(k, alphabet.entry(0).symbol);
  std::vector<std::size_t> odometer(k, 0);
  for (std::size_t n = 0; n < count; ++n) {
    set.patterns.emplace_back(current);
    // increment, last position fastest
    for (std::size_t pos = k; pos-- > 0;) {
      if (++odometer[pos] < m) {
        current[pos] = alphabet.entry(odometer[pos]).symbol;
        break;
      }
      odometer[pos] = 0;
      current[pos] = alphabet.entry(0).symbol;
    }
  }
  return set;
}

BestResponse best_response(const Pattern& opponent, std::size_t k,
                           const Alphabet& alphabet) {
  validate_pattern(opponent, alphabet);
  const PatternSet candidates = enumerate_patterns(k, alphabet);

  BestResponse result{opponent, Rational(0), {}};
  for (const Pattern& candidate : candidates.patterns) {
    if (classify(candidate, opponent) != Relation::Incomparable) continue;
    const Rational win = odds_against(candidate, opponent, alphabet).prob_a_first;
    if (result.all_maximizers.empty() || win > result.responder_win_prob) {
      result.responder_win_prob = win;
      result.all_maximizers.assign(1, candidate);
    } else if (win == result.responder_win_prob) {
      result.all_maximizers.push_back(candidate);
    }
  }
  if (result.all_maximizers.empty())
    raise(Errc::EmptySearchSpace,
          "no length-" + std::to_string(k) + " response exists for '" +
              opponent.str() + "'");
  return result;
}

Pattern construct_overlap_response(const Pattern& opponent,
                                   const Alphabet& alphabet) {
  validate_pattern(opponent, alphabet);
  const std::string& opp = opponent.str();

  std::optional<Pattern> best;
  Rational best_win = 0;
  for (const auto& entry : alphabet.entries()) {
    std::string shape(1, entry.symbol);
    shape.append(opp, 0, opp.size() - 1);
    Pattern candidate(std::move(shape));
    if (candidate == opponent) continue;
    const Rational win = odds_against(candidate, opponent, alphabet).prob_a_first;
    if (!best || win > best_win) {
      best = std::move(candidate);
      best_win = win;
    }
  }
  if (!best)
    raise(Errc::NoValidCandidate,
          "every candidate with the overlap shape equals the opponent");
  return *best;
}

Rational worst_case_win_prob(const Pattern& a, std::size_t k,
                             const Alphabet& alphabet) {
  validate_pattern(a, alphabet);
  const PatternSet opponents = enumerate_patterns(k, alphabet);

  std::optional<Rational> worst;
  for (const Pattern& b : opponents.patterns) {
    if (classify(a, b) != Relation::Incomparable) continue;
    const Rational win = odds_against(a, b, alphabet).prob_a_first;
    if (!worst || win < *worst) worst = win;
  }
  if (!worst)
    raise(Errc::EmptySearchSpace,
          "no length-" + std::to_string(k) + " opponent exists for '" +
              a.str() + "'");
  return *worst;
}

SweepGrid default_grid(SweepMetric metric) {
  switch (metric) {
    case SweepMetric::WorstCaseProb:
      return {Rational(1, 100), Rational(99, 100), Rational(1, 100)};
    case SweepMetric::WaitDifference:
      return {Rational(300, 1000), Rational(700, 1000), Rational(1, 1000)};
  }
  raise(Errc::InvalidArgument, "unknown sweep metric");
}

std::vector<SweepRow> sweep(SweepMetric metric, std::size_t k,
                            char heads_symbol, char tails_symbol,
                            const SweepGrid& grid) {
  if (grid.step <= 0) raise(Errc::InvalidGrid, "grid step must be positive");
  if (grid.from > grid.to)
    raise(Errc::InvalidGrid, "grid start exceeds grid end");
  if (grid.from <= 0 || grid.to >= 1)
    raise(Errc::InvalidGrid,
          "grid points must lie strictly inside (0,1); degenerate "
          "distributions make the race ill-posed");

  std::vector<SweepRow> rows;
  for (Rational p = grid.from; p <= grid.to; p += grid.step) {
    const Alphabet alphabet = validate_alphabet(
        {{std::string(1, heads_symbol), p},
         {std::string(1, tails_symbol), Rational(1) - p}});
    const PatternSet patterns = enumerate_patterns(k, alphabet);

    SweepRow row;
    row.param_value = p;
    row.values.reserve(patterns.patterns.size());
    for (const Pattern& a : patterns.patterns) {
      if (metric == SweepMetric::WorstCaseProb) {
        row.values.push_back(worst_case_win_prob(a, k, alphabet));
        continue;
      }
      // WaitDifference: responders attaining min_b P(a < b), then the
      // shortest joint game among those ties.
      std::optional<Rational> min_prob;
      for (const Pattern& b : patterns.patterns) {
        if (classify(a, b) != Relation::Incomparable) continue;
        const Rational win = odds_against(a, b, alphabet).prob_a_first;
        if (!min_prob || win < *min_prob) min_prob = win;
      }
      std::optional<Rational> joint;
      for (const Pattern& b : patterns.patterns) {
        if (classify(a, b) != Relation::Incomparable) continue;
        if (odds_against(a, b, alphabet).prob_a_first != *min_prob) continue;
        const Rational duration = expected_duration(a, b, alphabet);
        if (!joint || duration < *joint) joint = duration;
      }
      row.values.push_back(*joint - leading_payoff(a, a, alphabet));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace penney
