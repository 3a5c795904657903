#pragma once

#include <cstdint>
#include <string_view>

#include "penney/core.hpp"

namespace penney {

// Pinned generator, recorded in every simulation output. Each trial runs on
// its own mt19937_64 seeded with splitmix64(seed + (trial_index+1) * gamma),
// so results do not depend on scheduling or thread count. Symbols are drawn
// by comparing a raw 64-bit draw against precomputed cumulative-probability
// cut points (floor(cum * 2^64)), in declaration order.
inline constexpr std::string_view kRngId = "splitmix64+mt19937_64/v1";

// Ill-conditioned configs should fail, not hang.
inline constexpr std::uint64_t kMaxFlipsPerTrial = 1'000'000'000;

struct SimConfig {
  Pattern a;
  Pattern b;
  Alphabet alphabet;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
};

struct RaceStats {
  std::uint64_t trials = 0;
  std::uint64_t wins_a = 0;
  std::uint64_t wins_b = 0;
  std::uint64_t total_flips = 0;
  BigInt flips_sumsq = 0;             // sum of squared per-trial lengths
  std::uint64_t min_trial_flips = 0;
  std::uint64_t max_trial_flips = 0;

  Rational winrate_a() const { return Rational(wins_a, trials); }
  Rational winrate_b() const { return Rational(wins_b, trials); }
  Rational mean_flips() const { return Rational(total_flips, trials); }
  double sample_std_flips() const;    // unbiased; 0 for trials < 2

  friend bool operator==(const RaceStats&, const RaceStats&) = default;
};

// Plays the race `trials` times and tallies wins and stream lengths.
// Patterns must be distinct and incomparable (EqualPatterns /
// SubstringPair), with all characters possible (ZeroProbabilityCharacter).
// Identical config implies bit-identical stats.
RaceStats run_race(const SimConfig& config);

}  // namespace penney
