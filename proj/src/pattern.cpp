#include "penney/pattern.hpp"

#include "penney/errors.hpp"

namespace penney {

Pattern::Pattern(std::string chars) : chars_(std::move(chars)) {
  if (chars_.empty()) raise(Errc::EmptyPattern, "pattern must be nonempty");
}

Relation classify(const Pattern& a, const Pattern& b) {
  if (a == b) return Relation::Equal;
  if (a.length() < b.length() &&
      b.str().find(a.str()) != std::string::npos)
    return Relation::AStrictSubstringOfB;
  if (b.length() < a.length() &&
      a.str().find(b.str()) != std::string::npos)
    return Relation::BStrictSubstringOfA;
  return Relation::Incomparable;
}

void validate_pattern(const Pattern& pattern, const Alphabet& alphabet) {
  for (char c : pattern.str()) {
    if (!alphabet.contains(c))
      raise(Errc::UnknownSymbol, std::string("pattern character '") + c +
                                     "' is not in the alphabet");
  }
}

void require_positive_probs(const Pattern& pattern, const Alphabet& alphabet) {
  for (char c : pattern.str()) {
    if (alphabet.prob(c) == 0)
      raise(Errc::ZeroProbabilityCharacter,
            std::string("pattern character '") + c +
                "' has probability zero; the race cannot end");
  }
}

}  // namespace penney
