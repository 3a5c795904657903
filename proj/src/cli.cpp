#include "penney/cli.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "penney/errors.hpp"
#include "penney/version.hpp"

namespace penney::cli {

namespace {

using Json = nlohmann::ordered_json;

int digits_of(const FormatOptions& opts) {
  return opts.decimal_digits.value_or(6);
}

std::string dec(const Rational& value, const FormatOptions& opts) {
  return decimal_string(value, digits_of(opts), !opts.decimal_digits);
}

// Fraction, then the decimal when it adds information.
std::string frdec(const Rational& value, const FormatOptions& opts) {
  std::string out = fraction_string(value);
  if (boost::multiprecision::denominator(value) != 1 || opts.decimal_digits)
    out += " = " + dec(value, opts);
  return out;
}

// Table / sweep cells: exact fractions unless decimals were asked for.
std::string cell(const Rational& value, const FormatOptions& opts) {
  return opts.decimal_digits ? dec(value, opts) : fraction_string(value);
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string escaped = "\"";
  for (char c : value) {
    if (c == '"') escaped += '"';
    escaped += c;
  }
  escaped += '"';
  return escaped;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  line += '\n';
  return line;
}

std::string padded_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size())
        line.append(widths[i] - row[i].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

Json envelope(std::string_view command) {
  Json j;
  j["command"] = command;
  j["version"] = kVersion;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::AStrictSubstringOfB: return "a-substring-of-b";
    case Relation::BStrictSubstringOfA: return "b-substring-of-a";
    case Relation::Incomparable: return "incomparable";
  }
  return "?";
}

std::string expand_symbol_ranges(std::string_view symbols) {
  std::string out;
  std::size_t i = 0;
  while (i < symbols.size()) {
    if (i + 3 < symbols.size() && symbols[i + 1] == '.' &&
        symbols[i + 2] == '.') {
      const char lo = symbols[i];
      const char hi = symbols[i + 3];
      if (lo > hi)
        raise(Errc::ParseError, std::string("bad symbol range '") + lo +
                                    ".." + hi + "'");
      for (char c = lo;; ++c) {
        out += c;
        if (c == hi) break;
      }
      i += 4;
    } else {
      out += symbols[i];
      ++i;
    }
  }
  return out;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  raise(Errc::ParseError,
        "unknown format '" + std::string(name) + "' (text|json|csv)");
}

Alphabet parse_alphabet_spec(std::string_view spec) {
  constexpr std::string_view kUniform = "uniform:";
  if (spec.substr(0, kUniform.size()) == kUniform)
    return uniform_alphabet(expand_symbol_ranges(spec.substr(kUniform.size())));

  std::vector<std::pair<std::string, Rational>> entries;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view item = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) {
      if (entries.empty() && pos > spec.size()) break;  // empty spec
      raise(Errc::ParseError, "empty alphabet entry");
    }
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      raise(Errc::ParseError,
            "alphabet entry '" + std::string(item) + "' needs SYMBOL:PROB");
    std::string_view symbol = item.substr(0, colon);
    if (symbol.empty())
      raise(Errc::ParseError,
            "alphabet entry '" + std::string(item) + "' has no symbol");
    entries.emplace_back(std::string(symbol),
                         parse_rational(item.substr(colon + 1)));
  }
  return validate_alphabet(entries);
}

std::string cmd_odds(const std::string& a, const std::string& b,
                     const std::string& alphabet_spec,
                     const FormatOptions& opts) {
  const Alphabet alphabet = parse_alphabet_spec(alphabet_spec);
  const Pattern pa(a), pb(b);
  const OddsReport report = odds_against(pa, pb, alphabet);
  const Relation relation = classify(pa, pb);
  const auto [reduced_against, reduced_favor] =
      reduced_integer_odds(report.against, report.in_favor);

  switch (opts.format) {
    case OutputFormat::Json: {
      Json j = envelope("odds");
      j["a"] = a;
      j["b"] = b;
      j["alphabet"] = alphabet.spec_string();
      j["relation"] = relation_name(relation);
      j["against"] = fraction_string(report.against);
      j["in_favor"] = fraction_string(report.in_favor);
      j["reduced_against"] = reduced_against.str();
      j["reduced_in_favor"] = reduced_favor.str();
      j["prob_a_first"] = fraction_string(report.prob_a_first);
      j["prob_a_first_decimal"] = dec(report.prob_a_first, opts);
      return dump(j);
    }
    case OutputFormat::Csv:
      return csv_line({"a", "b", "alphabet", "against", "in_favor",
                       "prob_a_first"}) +
             csv_line({a, b, alphabet.spec_string(),
                       fraction_string(report.against),
                       fraction_string(report.in_favor),
                       fraction_string(report.prob_a_first)});
    case OutputFormat::Text:
      break;
  }

  if (relation == Relation::AStrictSubstringOfB)
    return "P(A first) = 1 (A is a substring of B)\n";
  if (relation == Relation::BStrictSubstringOfA)
    return "P(A first) = 0 (B is a substring of A)\n";
  std::string out = "odds against A = " + fraction_string(report.against) +
                    ":" + fraction_string(report.in_favor);
  out += " (" + reduced_against.str() + ":" + reduced_favor.str() + ")";
  out += "; P(A first) = " + frdec(report.prob_a_first, opts);
  out += '\n';
  return out;
}

std::string cmd_wait(const std::string& a, const std::optional<std::string>& b,
                     const std::string& alphabet_spec,
                     const FormatOptions& opts) {
  const Alphabet alphabet = parse_alphabet_spec(alphabet_spec);
  const Pattern pa(a);
  const Pattern pb = b ? Pattern(*b) : pa;
  const Rational flips = expected_duration(pa, pb, alphabet);

  switch (opts.format) {
    case OutputFormat::Json: {
      Json j = envelope("wait");
      j["a"] = a;
      if (b)
        j["b"] = *b;
      else
        j["b"] = nullptr;
      j["alphabet"] = alphabet.spec_string();
      j["expected_flips"] = fraction_string(flips);
      j["expected_flips_decimal"] = dec(flips, opts);
      return dump(j);
    }
    case OutputFormat::Csv:
      return csv_line({"a", "b", "alphabet", "expected_flips"}) +
             csv_line({a, b.value_or(""), alphabet.spec_string(),
                       fraction_string(flips)});
    case OutputFormat::Text:
      break;
  }

  std::string label = b ? a + " or " + *b : a;
  return "E[flips until " + label + "] = " + frdec(flips, opts) + "\n";
}

std::string cmd_table(std::size_t k, const std::string& alphabet_spec,
                      const FormatOptions& opts) {
  const Alphabet alphabet = parse_alphabet_spec(alphabet_spec);
  const PatternSet set = enumerate_patterns(k, alphabet);
  const std::size_t n = set.patterns.size();

  std::vector<std::vector<std::optional<Rational>>> cells(
      n, std::vector<std::optional<Rational>>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c)
        cells[r][c] =
            odds_against(set.patterns[r], set.patterns[c], alphabet)
                .prob_a_first;

  std::size_t checked = 0;
  if (opts.self_check) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (r == c) continue;
        const Rational transposed =
            odds_against(set.patterns[c], set.patterns[r], alphabet)
                .prob_a_first;
        if (*cells[r][c] + transposed != 1)
          throw std::logic_error("table self-check failed at (" +
                                 set.patterns[r].str() + "," +
                                 set.patterns[c].str() + ")");
        ++checked;
      }
  }

  switch (opts.format) {
    case OutputFormat::Json: {
      Json j = envelope("table");
      j["k"] = k;
      j["alphabet"] = alphabet.spec_string();
      Json names = Json::array();
      for (const auto& p : set.patterns) names.push_back(p.str());
      j["patterns"] = names;
      Json matrix = Json::array();
      for (std::size_t r = 0; r < n; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < n; ++c) {
          if (cells[r][c])
            row.push_back(cell(*cells[r][c], opts));
          else
            row.push_back(nullptr);
        }
        matrix.push_back(std::move(row));
      }
      j["cells"] = matrix;
      if (opts.self_check) j["self_check"] = "ok";
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::vector<std::string> header{"pattern"};
      for (const auto& p : set.patterns) header.push_back(p.str());
      std::string out = csv_line(header);
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::string> row{set.patterns[r].str()};
        for (std::size_t c = 0; c < n; ++c)
          row.push_back(cells[r][c] ? cell(*cells[r][c], opts) : "");
        out += csv_line(row);
      }
      return out;
    }
    case OutputFormat::Text:
      break;
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  for (const auto& p : set.patterns) header.push_back(p.str());
  rows.push_back(std::move(header));
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::string> row{set.patterns[r].str()};
    for (std::size_t c = 0; c < n; ++c)
      row.push_back(cells[r][c] ? cell(*cells[r][c], opts) : "");
    rows.push_back(std::move(row));
  }
  std::string out = "P(row precedes column), alphabet " +
                    alphabet.spec_string() + "\n" + padded_table(rows);
  if (opts.self_check)
    out += "self-check: " + std::to_string(checked) + " cell pairs OK\n";
  return out;
}

std::string cmd_best_response(const std::string& a,
                              const std::string& alphabet_spec,
                              const FormatOptions& opts) {
  const Alphabet alphabet = parse_alphabet_spec(alphabet_spec);
  const Pattern opponent(a);
  const BestResponse br =
      best_response(opponent, opponent.length(), alphabet);

  switch (opts.format) {
    case OutputFormat::Json: {
      Json j = envelope("best-response");
      j["opponent"] = a;
      j["alphabet"] = alphabet.spec_string();
      j["responder"] = br.representative().str();
      j["win_prob"] = fraction_string(br.responder_win_prob);
      j["win_prob_decimal"] = dec(br.responder_win_prob, opts);
      Json ties = Json::array();
      for (const auto& p : br.all_maximizers) ties.push_back(p.str());
      j["all_maximizers"] = ties;
      return dump(j);
    }
    case OutputFormat::Csv: {
      std::string ties;
      for (const auto& p : br.all_maximizers) {
        if (!ties.empty()) ties += '|';
        ties += p.str();
      }
      return csv_line({"opponent", "alphabet", "responder", "win_prob",
                       "all_maximizers"}) +
             csv_line({a, alphabet.spec_string(), br.representative().str(),
                       fraction_string(br.responder_win_prob), ties});
    }
    case OutputFormat::Text:
      break;
  }

  std::string out = "best response to " + a + ": " +
                    br.representative().str() +
                    ", P(win) = " + frdec(br.responder_win_prob, opts);
  if (br.all_maximizers.size() > 1) {
    out += " (ties:";
    for (const auto& p : br.all_maximizers) out += " " + p.str();
    out += ")";
  }
  out += '\n';
  return out;
}

std::string cmd_sweep(const std::string& metric_name, std::size_t k,
                      const std::optional<std::string>& from,
                      const std::optional<std::string>& to,
                      const std::optional<std::string>& step, char heads,
                      char tails, const FormatOptions& opts) {
  SweepMetric metric;
  if (metric_name == "worst-case-prob")
    metric = SweepMetric::WorstCaseProb;
  else if (metric_name == "wait-difference")
    metric = SweepMetric::WaitDifference;
  else
    raise(Errc::ParseError, "unknown metric '" + metric_name +
                                "' (worst-case-prob|wait-difference)");

  SweepGrid grid = default_grid(metric);
  if (from) grid.from = parse_rational(*from);
  if (to) grid.to = parse_rational(*to);
  if (step) grid.step = parse_rational(*step);

  const std::vector<SweepRow> rows = sweep(metric, k, heads, tails, grid);
  // headers only; the probabilities play no role in enumeration order
  const PatternSet set = enumerate_patterns(
      k, validate_alphabet({{std::string(1, heads), Rational(1, 2)},
                            {std::string(1, tails), Rational(1, 2)}}));

  switch (opts.format) {
    case OutputFormat::Json: {
      Json j = envelope("sweep");
      j["metric"] = metric_name;
      j["k"] = k;
      j["heads"] = std::string(1, heads);
      j["tails"] = std::string(1, tails);
      j["from"] = fraction_string(grid.from);
      j["to"] = fraction_string(grid.to);
      j["step"] = fraction_string(grid.step);
      Json names = Json::array();
      for (const auto& p : set.patterns) names.push_back(p.str());
      j["patterns"] = names;
      Json out_rows = Json::array();
      for (const auto& row : rows) {
        Json r;
        r["param"] = fraction_string(row.param_value);
        Json values = Json::array();
        for (const auto& v : row.values) values.push_back(cell(v, opts));
        r["values"] = values;
        out_rows.push_back(std::move(r));
      }
      j["rows"] = out_rows;
      return dump(j);
    }
    case OutputFormat::Csv:
    case OutputFormat::Text: {
      std::vector<std::string> header{"param"};
      for (const auto& p : set.patterns) header.push_back(p.str());
      if (opts.format == OutputFormat::Csv) {
        std::string out = csv_line(header);
        for (const auto& row : rows) {
          std::vector<std::string> fields{fraction_string(row.param_value)};
          for (const auto& v : row.values) fields.push_back(cell(v, opts));
          out += csv_line(fields);
        }
        return out;
      }
      std::vector<std::vector<std::string>> text_rows{header};
      for (const auto& row : rows) {
        std::vector<std::string> fields{fraction_string(row.param_value)};
        for (const auto& v : row.values) fields.push_back(cell(v, opts));
        text_rows.push_back(std::move(fields));
      }
      return padded_table(text_rows);
    }
  }
  return {};
}

std::string cmd_simulate(const std::string& a, const std::string& b,
                         const std::string& alphabet_spec,
                         std::uint64_t trials, std::uint64_t seed,
                         const FormatOptions& opts) {
  SimConfig config{Pattern(a), Pattern(b), parse_alphabet_spec(alphabet_spec),
                   trials, seed};
  const RaceStats stats = run_race(config);

  switch (opts.format) {
    case OutputFormat::Json: {
      Json j = envelope("simulate");
      j["a"] = a;
      j["b"] = b;
      j["alphabet"] = config.alphabet.spec_string();
      j["trials"] = trials;
      j["seed"] = seed;
      j["rng"] = kRngId;
      j["wins_a"] = stats.wins_a;
      j["wins_b"] = stats.wins_b;
      j["winrate_a"] = fraction_string(stats.winrate_a());
      j["winrate_a_decimal"] = dec(stats.winrate_a(), opts);
      j["winrate_b"] = fraction_string(stats.winrate_b());
      j["winrate_b_decimal"] = dec(stats.winrate_b(), opts);
      j["total_flips"] = stats.total_flips;
      j["mean_flips"] = fraction_string(stats.mean_flips());
      j["mean_flips_decimal"] = dec(stats.mean_flips(), opts);
      j["min_trial_flips"] = stats.min_trial_flips;
      j["max_trial_flips"] = stats.max_trial_flips;
      return dump(j);
    }
    case OutputFormat::Csv:
      return csv_line({"a", "b", "alphabet", "trials", "seed", "rng",
                       "wins_a", "wins_b", "winrate_a", "winrate_b",
                       "total_flips", "mean_flips"}) +
             csv_line({a, b, config.alphabet.spec_string(),
                       std::to_string(trials), std::to_string(seed),
                       std::string(kRngId), std::to_string(stats.wins_a),
                       std::to_string(stats.wins_b),
                       fraction_string(stats.winrate_a()),
                       fraction_string(stats.winrate_b()),
                       std::to_string(stats.total_flips),
                       fraction_string(stats.mean_flips())});
    case OutputFormat::Text:
      break;
  }

  std::ostringstream out;
  out << "simulate " << a << " vs " << b
      << "  alphabet=" << config.alphabet.spec_string()
      << "  trials=" << trials << "  seed=" << seed << "  rng=" << kRngId
      << "\n";
  out << "wins: A=" << stats.wins_a << " B=" << stats.wins_b << "\n";
  out << "winrate A = " << frdec(stats.winrate_a(), opts) << "\n";
  out << "winrate B = " << frdec(stats.winrate_b(), opts) << "\n";
  out << "mean flips = " << frdec(stats.mean_flips(), opts) << "\n";
  return out.str();
}

}  // namespace penney::cli
