#pragma once

#include <vector>

#include "penney/core.hpp"

namespace penney {

// Enumeration guard; configurable per call.
inline constexpr std::size_t kDefaultEnumerationCap = 12;

struct PatternSet {
  std::size_t length = 0;
  std::vector<Pattern> patterns;  // lexicographic in declaration order
};

// All |alphabet|^k patterns of length k, first symbol varying slowest.
// Throws EnumerationTooLarge when k exceeds the cap (or the pattern count
// would be absurd), InvalidArgument when k == 0.
PatternSet enumerate_patterns(std::size_t k, const Alphabet& alphabet,
                              std::size_t cap = kDefaultEnumerationCap);

struct BestResponse {
  Pattern opponent;
  Rational responder_win_prob;          // max_b P(b precedes opponent)
  std::vector<Pattern> all_maximizers;  // every tie, enumeration order
  const Pattern& representative() const { return all_maximizers.front(); }
};

// Exhaustive exact argmax of P(b precedes opponent) over all length-k
// patterns b, skipping b == opponent and substring pairs. Throws
// EmptySearchSpace when no candidate exists (single-symbol alphabet with
// k == len(opponent)).
BestResponse best_response(const Pattern& opponent, std::size_t k,
                           const Alphabet& alphabet);

// The overlap-maximizing response shape: candidates are the patterns whose
// last k-1 characters equal the first k-1 characters of the opponent; the
// leading character is chosen exhaustively to maximize the win probability
// (first symbol in declaration order on ties). At k == 3 under the fair coin
// this recovers the classic second-mover rule. Throws NoValidCandidate when
// only the opponent itself has the required shape.
Pattern construct_overlap_response(const Pattern& opponent,
                                   const Alphabet& alphabet);

// min_b P(a precedes b) over the same search space as best_response,
// computed by its own loop; equals 1 - best_response(a,...).responder_win_prob.
Rational worst_case_win_prob(const Pattern& a, std::size_t k,
                             const Alphabet& alphabet);

enum class SweepMetric {
  WorstCaseProb,    // min_b P(a precedes b)
  WaitDifference,   // E[duration vs best response] - E[waiting for a alone]
};

struct SweepGrid {
  Rational from;
  Rational to;
  Rational step;
};

struct SweepRow {
  Rational param_value;          // P(heads) at this grid point
  std::vector<Rational> values;  // one per pattern, enumeration order
};

SweepGrid default_grid(SweepMetric metric);

// Evaluates the metric for every length-k pattern over the binary alphabet
// {heads_symbol: p, tails_symbol: 1-p} at every p in the grid. Grid points
// must lie strictly inside (0,1) (InvalidGrid otherwise). For
// WaitDifference, ties in the responder argmax are broken toward the
// responder minimizing the joint expected duration. Rows come back in grid
// order.
std::vector<SweepRow> sweep(SweepMetric metric, std::size_t k,
                            char heads_symbol, char tails_symbol,
                            const SweepGrid& grid);

}  // namespace penney
