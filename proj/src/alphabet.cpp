#include "penney/alphabet.hpp"

#include "penney/errors.hpp"

namespace penney {

const Rational& Alphabet::prob(char symbol) const {
  auto i = index_of(symbol);
  if (!i)
    raise(Errc::UnknownSymbol,
          std::string("symbol '") + symbol + "' is not in the alphabet");
  return entries_[*i].prob;
}

std::string Alphabet::spec_string() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += ',';
    out += e.symbol;
    out += ':';
    out += fraction_string(e.prob);
  }
  return out;
}

Alphabet validate_alphabet(
    const std::vector<std::pair<std::string, Rational>>& entries) {
  if (entries.empty())
    raise(Errc::EmptyAlphabet, "alphabet has no symbols");

  Alphabet result;
  result.index_.fill(-1);
  result.entries_.reserve(entries.size());

  Rational sum = 0;
  for (const auto& [symbol, prob] : entries) {
    if (symbol.size() != 1)
      raise(Errc::MultiCharSymbol,
            "symbol '" + symbol + "' must be a single character");
    const char c = symbol[0];
    if (result.index_[static_cast<unsigned char>(c)] >= 0)
      raise(Errc::DuplicateSymbol, "duplicate symbol '" + symbol + "'");
    if (prob < 0)
      raise(Errc::NegativeProbability,
            "probability of '" + symbol + "' is negative");
    if (prob > 1)
      raise(Errc::NotADistribution,
            "probability of '" + symbol + "' exceeds 1");
    result.index_[static_cast<unsigned char>(c)] =
        static_cast<int16_t>(result.entries_.size());
    result.entries_.push_back({c, prob});
    sum += prob;
  }
  if (sum != 1)
    raise(Errc::NotADistribution,
          "probabilities sum to " + fraction_string(sum) + ", expected 1");
  return result;
}

Alphabet uniform_alphabet(std::string_view symbols) {
  if (symbols.empty()) raise(Errc::EmptyAlphabet, "alphabet has no symbols");
  std::vector<std::pair<std::string, Rational>> entries;
  entries.reserve(symbols.size());
  const Rational each(1, static_cast<unsigned>(symbols.size()));
  for (char c : symbols) entries.emplace_back(std::string(1, c), each);
  return validate_alphabet(entries);
}

Alphabet fair_coin() {
  return validate_alphabet({{"H", Rational(1, 2)}, {"T", Rational(1, 2)}});
}

}  // namespace penney
