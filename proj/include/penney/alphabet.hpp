#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "penney/rational.hpp"

namespace penney {

struct AlphabetEntry {
  char symbol;
  Rational prob;
};

// An ordered categorical distribution over single-character symbols.
// Iteration order is the declaration order; enumeration and tie-breaking
// everywhere in the library depend on it being stable.
class Alphabet {
 public:
  std::size_t size() const { return entries_.size(); }
  const AlphabetEntry& entry(std::size_t i) const { return entries_[i]; }
  const std::vector<AlphabetEntry>& entries() const { return entries_; }

  std::optional<std::size_t> index_of(char symbol) const {
    int16_t i = index_[static_cast<unsigned char>(symbol)];
    if (i < 0) return std::nullopt;
    return static_cast<std::size_t>(i);
  }
  bool contains(char symbol) const { return index_of(symbol).has_value(); }

  // Throws UnknownSymbol for characters outside the alphabet.
  const Rational& prob(char symbol) const;

  // Canonical textual form, e.g. "H:1/2,T:1/2".
  std::string spec_string() const;

 private:
  friend Alphabet validate_alphabet(
      const std::vector<std::pair<std::string, Rational>>& entries);

  std::vector<AlphabetEntry> entries_;
  std::array<int16_t, 256> index_{};
};

// Checks all distribution invariants: nonempty, single-character symbols,
// pairwise distinct, probabilities in [0,1] summing exactly to 1.
Alphabet validate_alphabet(
    const std::vector<std::pair<std::string, Rational>>& entries);

// Equal probability 1/n per symbol, declaration order as given.
Alphabet uniform_alphabet(std::string_view symbols);

// {H:1/2, T:1/2}
Alphabet fair_coin();

}  // namespace penney
