#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "penney/alphabet.hpp"

namespace penney {

// A finite nonempty symbol string. Membership in a concrete alphabet is a
// separate check (validate_pattern) so the same pattern value can be raced
// under different distributions.
class Pattern {
 public:
  explicit Pattern(std::string chars);  // throws EmptyPattern

  const std::string& str() const { return chars_; }
  std::size_t length() const { return chars_.size(); }
  char at(std::size_t i) const { return chars_[i]; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::string chars_;
};

enum class Relation {
  Equal,
  AStrictSubstringOfB,
  BStrictSubstringOfA,
  Incomparable,
};

// Exactly one variant holds for any ordered pair. Strict substring requires
// strictly smaller length plus a contiguous occurrence.
Relation classify(const Pattern& a, const Pattern& b);

// Throws UnknownSymbol unless every character appears in the alphabet.
void validate_pattern(const Pattern& pattern, const Alphabet& alphabet);

// Throws ZeroProbabilityCharacter if any character has probability zero.
// A pattern with an impossible character makes a race ill-posed, so the
// race-level operations reject these up front.
void require_positive_probs(const Pattern& pattern, const Alphabet& alphabet);

}  // namespace penney
