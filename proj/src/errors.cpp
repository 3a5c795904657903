#include "penney/errors.hpp"

namespace penney {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyAlphabet: return "EmptyAlphabet";
    case Errc::MultiCharSymbol: return "MultiCharSymbol";
    case Errc::DuplicateSymbol: return "DuplicateSymbol";
    case Errc::NegativeProbability: return "NegativeProbability";
    case Errc::NotADistribution: return "NotADistribution";
    case Errc::EmptyPattern: return "EmptyPattern";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::ZeroProbabilityCharacter: return "ZeroProbabilityCharacter";
    case Errc::EqualPatterns: return "EqualPatterns";
    case Errc::NonBinaryPattern: return "NonBinaryPattern";
    case Errc::EmptySearchSpace: return "EmptySearchSpace";
    case Errc::NoValidCandidate: return "NoValidCandidate";
    case Errc::InvalidGrid: return "InvalidGrid";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::SubstringPair: return "SubstringPair";
    case Errc::TrialOverrun: return "TrialOverrun";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace penney
