#include "penney/sim.hpp"

#include <cassert>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "penney/errors.hpp"

namespace penney {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return mix64(seed + (trial + 1) * kGolden);
}

// cut[j] = floor(P(X <= symbol_j) * 2^64) for j < m-1; the last symbol
// absorbs the remainder. Exact cut points make the draw deterministic
// across platforms.
std::vector<std::uint64_t> cumulative_cuts(const Alphabet& alphabet) {
  std::vector<std::uint64_t> cuts;
  cuts.reserve(alphabet.size() - 1);
  Rational cum = 0;
  for (std::size_t j = 0; j + 1 < alphabet.size(); ++j) {
    cum += alphabet.entry(j).prob;
    BigInt scaled = (boost::multiprecision::numerator(cum) << 64) /
                    boost::multiprecision::denominator(cum);
    const BigInt max64 = (BigInt(1) << 64) - 1;
    if (scaled > max64) scaled = max64;  // trailing zero-probability symbols
    cuts.push_back(scaled.convert_to<std::uint64_t>());
  }
  return cuts;
}

}  // namespace

double RaceStats::sample_std_flips() const {
  if (trials < 2) return 0.0;
  const Rational n(trials);
  const Rational sum(total_flips);
  const Rational variance =
      (Rational(flips_sumsq) - sum * sum / n) / (n - 1);
  return std::sqrt(to_double(variance));
}

RaceStats run_race(const SimConfig& config) {
  validate_pattern(config.a, config.alphabet);
  validate_pattern(config.b, config.alphabet);
  require_positive_probs(config.a, config.alphabet);
  require_positive_probs(config.b, config.alphabet);
  switch (classify(config.a, config.b)) {
    case Relation::Equal:
      raise(Errc::EqualPatterns, "patterns cannot precede themselves");
    case Relation::AStrictSubstringOfB:
    case Relation::BStrictSubstringOfA:
      raise(Errc::SubstringPair,
            "one pattern contains the other; the race is decided in advance");
    case Relation::Incomparable:
      break;
  }
  if (config.trials == 0)
    raise(Errc::InvalidArgument, "need at least one trial");

  const std::string& a = config.a.str();
  const std::string& b = config.b.str();
  const std::size_t window_size = std::max(a.size(), b.size());
  const std::vector<std::uint64_t> cuts = cumulative_cuts(config.alphabet);

  RaceStats stats;
  stats.trials = config.trials;

  std::string window;
  window.reserve(window_size);
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    std::mt19937_64 engine(trial_seed(config.seed, trial));
    window.clear();
    std::uint64_t flips = 0;
    for (;;) {
      if (flips == kMaxFlipsPerTrial)
        raise(Errc::TrialOverrun,
              "trial exceeded " + std::to_string(kMaxFlipsPerTrial) +
                  " flips");
      const std::uint64_t draw = engine();
      std::size_t symbol = cuts.size();
      for (std::size_t j = 0; j < cuts.size(); ++j) {
        if (draw < cuts[j]) {
          symbol = j;
          break;
        }
      }
      assert(symbol < config.alphabet.size());
      if (window.size() == window_size) window.erase(window.begin());
      window.push_back(config.alphabet.entry(symbol).symbol);
      ++flips;

      const std::string_view view(window);
      if (view.size() >= a.size() && view.ends_with(a)) {
        ++stats.wins_a;
        assert(flips >= a.size());
        break;
      }
      if (view.size() >= b.size() && view.ends_with(b)) {
        ++stats.wins_b;
        assert(flips >= b.size());
        break;
      }
    }
    stats.total_flips += flips;
    stats.flips_sumsq += BigInt(flips) * flips;
    if (trial == 0 || flips < stats.min_trial_flips)
      stats.min_trial_flips = flips;
    if (flips > stats.max_trial_flips) stats.max_trial_flips = flips;
  }
  return stats;
}

}  // namespace penney
