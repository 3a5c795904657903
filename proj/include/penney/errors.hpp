#pragma once

#include <stdexcept>
#include <string>

namespace penney {

// Every failure mode exposed by the library. The enumerator name doubles as
// the stable machine-readable code printed by the CLI.
enum class Errc {
  EmptyAlphabet,
  MultiCharSymbol,
  DuplicateSymbol,
  NegativeProbability,
  NotADistribution,
  EmptyPattern,
  UnknownSymbol,
  ZeroProbabilityCharacter,
  EqualPatterns,
  NonBinaryPattern,
  EmptySearchSpace,
  NoValidCandidate,
  InvalidGrid,
  EnumerationTooLarge,
  SubstringPair,
  TrialOverrun,
  ParseError,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace penney
