#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "penney/cli.hpp"
#include "penney/version.hpp"
#include "support/test_util.hpp"

using namespace penney;
using namespace penney::cli;
using penney::testing::error_code_of;
using nlohmann::json;

namespace {

Rational Q(long long n, long long d = 1) { return Rational(n, d); }

FormatOptions text_opts() { return {}; }
FormatOptions json_opts() {
  FormatOptions o;
  o.format = OutputFormat::Json;
  return o;
}
FormatOptions csv_opts() {
  FormatOptions o;
  o.format = OutputFormat::Csv;
  return o;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("1/2") == Q(1, 2));
  CHECK(parse_rational("0.75") == Q(3, 4));
  CHECK(parse_rational(".5") == Q(1, 2));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational(" 2/4 ") == Q(1, 2));
  CHECK(parse_rational("-0.5") == Q(-1, 2));
  CHECK(error_code_of([] { parse_rational("1/0"); }) == Errc::ParseError);
  CHECK(error_code_of([] { parse_rational("abc"); }) == Errc::ParseError);
  CHECK(error_code_of([] { parse_rational("1.2.3"); }) == Errc::ParseError);
  CHECK(error_code_of([] { parse_rational(""); }) == Errc::ParseError);
  CHECK(error_code_of([] { parse_rational("1e5"); }) == Errc::ParseError);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(decimal_string(Q(3, 8), 3) == "0.375");
  CHECK(decimal_string(Q(1, 8), 2) == "0.12");   // 0.125 -> even
  CHECK(decimal_string(Q(3, 200), 2) == "0.02");  // 0.015 -> even
  CHECK(decimal_string(Q(1, 40), 2) == "0.02");   // 0.025 -> even
  CHECK(decimal_string(Q(-32, 7), 3) == "-4.571");
  CHECK(decimal_string(Q(5), 2) == "5.00");
  CHECK(decimal_string(Q(5), 2, true) == "5");
  CHECK(decimal_string(Q(1, 2), 6, true) == "0.5");
  CHECK(decimal_string(Q(0), 2, true) == "0");

  const Rational covfefe_wait(boost::multiprecision::pow(BigInt(26), 8), 51);
  CHECK(decimal_string(covfefe_wait, 2) == "4094648325.02");
}

TEST_CASE("fraction rendering") {
  CHECK(fraction_string(Q(3, 8)) == "3/8");
  CHECK(fraction_string(Q(7)) == "7");
  CHECK(fraction_string(Q(-32, 7)) == "-32/7");
}

TEST_CASE("parse_alphabet_spec") {
  const Alphabet fair = parse_alphabet_spec("H:1/2,T:1/2");
  CHECK(fair.size() == 2);
  CHECK(fair.prob('H') == Q(1, 2));
  CHECK(fair.spec_string() == "H:1/2,T:1/2");

  const Alphabet decimals = parse_alphabet_spec("H:0.75,T:.25");
  CHECK(decimals.prob('H') == Q(3, 4));

  const Alphabet abc = parse_alphabet_spec("uniform:abc");
  CHECK(abc.size() == 3);
  CHECK(abc.prob('b') == Q(1, 3));

  const Alphabet uppercase = parse_alphabet_spec("uniform:A..Z");
  CHECK(uppercase.size() == 26);
  CHECK(uppercase.prob('Q') == Q(1, 26));
  CHECK(uppercase.entry(0).symbol == 'A');
  CHECK(uppercase.entry(25).symbol == 'Z');

  const Alphabet mixed = parse_alphabet_spec("uniform:a..dX");
  CHECK(mixed.size() == 5);
  CHECK(mixed.contains('X'));
}

TEST_CASE("parse_alphabet_spec failures") {
  CHECK(error_code_of([] { parse_alphabet_spec(""); }) ==
        Errc::EmptyAlphabet);
  CHECK(error_code_of([] { parse_alphabet_spec("H:1/2;T:1/2"); }) ==
        Errc::ParseError);
  CHECK(error_code_of([] { parse_alphabet_spec("H:1/2,T"); }) ==
        Errc::ParseError);
  CHECK(error_code_of([] { parse_alphabet_spec("H:1/2,T:1/3"); }) ==
        Errc::NotADistribution);
  CHECK(error_code_of([] { parse_alphabet_spec("uniform:AA"); }) ==
        Errc::DuplicateSymbol);
  CHECK(error_code_of([] { parse_alphabet_spec("uniform:Z..A"); }) ==
        Errc::ParseError);
  CHECK(error_code_of([] { parse_alphabet_spec("HT:1"); }) ==
        Errc::MultiCharSymbol);
}

TEST_CASE("odds command text output") {
  CHECK(cmd_odds("HTH", "TTH", "H:1/2,T:1/2", text_opts()) ==
        "odds against A = 10:6 (5:3); P(A first) = 3/8 = 0.375\n");
  CHECK(cmd_odds("TH", "HTH", "H:1/2,T:1/2", text_opts()) ==
        "P(A first) = 1 (A is a substring of B)\n");
  CHECK(cmd_odds("HTH", "TH", "H:1/2,T:1/2", text_opts()) ==
        "P(A first) = 0 (B is a substring of A)\n");
  CHECK(error_code_of([] {
          cmd_odds("HTH", "HTH", "H:1/2,T:1/2", text_opts());
        }) == Errc::EqualPatterns);
}

TEST_CASE("odds command scales fractional odds to integers") {
  const std::string out =
      cmd_odds("HTH", "TTH", "H:3/4,T:1/4", text_opts());
  CHECK(out == "odds against A = 76/9:20 (19:45); "
               "P(A first) = 45/64 = 0.703125\n");
}

TEST_CASE("odds command json round-trips and echoes inputs") {
  const std::string out = cmd_odds("HTH", "TTH", "H:1/2,T:1/2", json_opts());
  const json j = json::parse(out);
  CHECK(json::parse(j.dump()) == j);
  CHECK(j["command"] == "odds");
  CHECK(j["version"] == std::string(kVersion));
  CHECK(j["a"] == "HTH");
  CHECK(j["b"] == "TTH");
  CHECK(j["alphabet"] == "H:1/2,T:1/2");
  CHECK(j["relation"] == "incomparable");
  CHECK(j["against"] == "10");
  CHECK(j["in_favor"] == "6");
  CHECK(j["reduced_against"] == "5");
  CHECK(j["reduced_in_favor"] == "3");
  CHECK(j["prob_a_first"] == "3/8");
  CHECK(j["prob_a_first_decimal"] == "0.375");
}

TEST_CASE("odds command csv") {
  const std::string out = cmd_odds("HTH", "TTH", "H:1/2,T:1/2", csv_opts());
  CHECK(out ==
        "a,b,alphabet,against,in_favor,prob_a_first\n"
        "HTH,TTH,\"H:1/2,T:1/2\",10,6,3/8\n");
}

TEST_CASE("wait command") {
  CHECK(cmd_wait("HTH", std::nullopt, "H:1/2,T:1/2", text_opts()) ==
        "E[flips until HTH] = 10\n");
  CHECK(cmd_wait("HTHT", std::string("TTTH"), "H:1/2,T:1/2", text_opts()) ==
        "E[flips until HTHT or TTTH] = 79/8 = 9.875\n");

  const std::string covfefe =
      cmd_wait("COVFEFE", std::string("CCOVFEF"), "uniform:A..Z",
               json_opts());
  const json j = json::parse(covfefe);
  CHECK(j["expected_flips"] == "208827064576/51");
  CHECK(j["expected_flips_decimal"] == "4094648325.019608");

  FormatOptions two_digits;
  two_digits.decimal_digits = 2;
  const std::string rounded = cmd_wait("COVFEFE", std::string("CCOVFEF"),
                                       "uniform:A..Z", two_digits);
  CHECK(rounded ==
        "E[flips until COVFEFE or CCOVFEF] = 208827064576/51 "
        "= 4094648325.02\n");
}

TEST_CASE("table command") {
  FormatOptions opts = text_opts();
  opts.self_check = true;
  const std::string text = cmd_table(1, "H:1/2,T:1/2", opts);
  CHECK(text.find("1/2") != std::string::npos);
  CHECK(text.find("self-check: 2 cell pairs OK") != std::string::npos);

  const std::string out = cmd_table(3, "H:1/2,T:1/2", json_opts());
  const json j = json::parse(out);
  CHECK(json::parse(j.dump()) == j);
  CHECK(j["patterns"].size() == 8);
  CHECK(j["patterns"][2] == "HTH");
  CHECK(j["patterns"][6] == "TTH");
  CHECK(j["cells"][2][6] == "3/8");   // HTH vs TTH
  CHECK(j["cells"][4][0] == "7/8");   // THH vs HHH
  CHECK(j["cells"][0][0].is_null());

  const std::string csv = cmd_table(1, "H:1/2,T:1/2", csv_opts());
  CHECK(csv ==
        "pattern,H,T\n"
        "H,,1/2\n"
        "T,1/2,\n");
}

TEST_CASE("best-response command") {
  CHECK(cmd_best_response("HHH", "H:1/2,T:1/2", text_opts()) ==
        "best response to HHH: THH, P(win) = 7/8 = 0.875\n");

  const std::string out =
      cmd_best_response("A", "uniform:ABC", json_opts());
  const json j = json::parse(out);
  CHECK(j["responder"] == "B");
  CHECK(j["win_prob"] == "1/2");
  CHECK(j["all_maximizers"] == json::array({"B", "C"}));
}

TEST_CASE("sweep command") {
  const std::string csv =
      cmd_sweep("worst-case-prob", 1, std::string("1/4"), std::string("3/4"),
                std::string("1/4"), 'H', 'T', csv_opts());
  CHECK(csv ==
        "param,H,T\n"
        "1/4,1/4,3/4\n"
        "1/2,1/2,1/2\n"
        "3/4,3/4,1/4\n");

  const std::string out =
      cmd_sweep("wait-difference", 3, std::string("1/2"), std::string("1/2"),
                std::string("1"), 'H', 'T', json_opts());
  const json j = json::parse(out);
  CHECK(json::parse(j.dump()) == j);
  CHECK(j["metric"] == "wait-difference");
  CHECK(j["rows"].size() == 1);
  CHECK(j["rows"][0]["param"] == "1/2");
  CHECK(j["rows"][0]["values"][0] == "-7");
  CHECK(j["rows"][0]["values"][2] == "-4");

  CHECK(error_code_of([] {
          cmd_sweep("nope", 3, {}, {}, {}, 'H', 'T', text_opts());
        }) == Errc::ParseError);
  CHECK(error_code_of([] {
          cmd_sweep("worst-case-prob", 3, std::string("0"), {}, {}, 'H', 'T',
                    text_opts());
        }) == Errc::InvalidGrid);
}

TEST_CASE("simulate command is reproducible and self-describing") {
  const std::string first =
      cmd_simulate("HTH", "TTH", "H:1/2,T:1/2", 2000, 5, json_opts());
  const std::string second =
      cmd_simulate("HTH", "TTH", "H:1/2,T:1/2", 2000, 5, json_opts());
  CHECK(first == second);

  const json j = json::parse(first);
  CHECK(json::parse(j.dump()) == j);
  CHECK(j["seed"] == 5);
  CHECK(j["trials"] == 2000);
  CHECK(j["rng"] == std::string(kRngId));
  CHECK(j["wins_a"].get<std::uint64_t>() +
            j["wins_b"].get<std::uint64_t>() ==
        2000);

  const std::string text =
      cmd_simulate("H", "T", "H:1/2,T:1/2", 100, 0, text_opts());
  CHECK(text.find("rng=" + std::string(kRngId)) != std::string::npos);
  CHECK(text.find("seed=0") != std::string::npos);
}
