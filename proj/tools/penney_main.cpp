#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "penney/cli.hpp"
#include "penney/errors.hpp"
#include "penney/version.hpp"

namespace {

constexpr const char* kDefaultAlphabet = "H:1/2,T:1/2";

struct GlobalOptions {
  std::string format = "text";
  std::optional<int> decimal_digits;
  bool self_check = false;

  penney::cli::FormatOptions to_format_options() const {
    penney::cli::FormatOptions opts;
    opts.format = penney::cli::parse_format(format);
    opts.decimal_digits = decimal_digits;
    opts.self_check = self_check;
    return opts;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "penney: exact odds, waiting times and simulations for pattern races "
      "over i.i.d. categorical streams"};
  app.set_version_flag("--version", std::string(penney::kVersion));
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand

  GlobalOptions global;
  int decimal_digits = -1;
  app.add_option("--format", global.format, "Output format: text|json|csv")
      ->envname("PENNEY_FORMAT")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--decimal", decimal_digits,
                 "Render decimals with exactly N digits (round half to even)")
      ->check(CLI::Range(0, 10000));
  app.add_flag("--self-check", global.self_check,
               "Recompute transposed cells and verify complementarity (table)");

  std::string a, b, alphabet = kDefaultAlphabet;
  std::optional<std::string> opt_b;
  std::size_t k = 3;
  std::string metric = "worst-case-prob";
  std::optional<std::string> from, to, step;
  std::string heads = "H", tails = "T";
  std::uint64_t trials = 10000, seed = 0;

  CLI::App* odds = app.add_subcommand(
      "odds", "Odds and probability that pattern A precedes pattern B");
  odds->add_option("--a", a, "First pattern")->required();
  odds->add_option("--b", b, "Second pattern")->required();
  odds->add_option("--alphabet", alphabet, "SYM:PROB,... or uniform:SYMS");

  CLI::App* wait = app.add_subcommand(
      "wait", "Expected flips until a pattern occurs (or the first of two)");
  wait->add_option("--a", a, "Pattern")->required();
  wait->add_option("--b", b, "Optional second pattern");
  wait->add_option("--alphabet", alphabet, "SYM:PROB,... or uniform:SYMS");

  CLI::App* table = app.add_subcommand(
      "table", "Full matrix of P(row precedes column) over length-k patterns");
  table->add_option("--k", k, "Pattern length")->check(CLI::PositiveNumber);
  table->add_option("--alphabet", alphabet, "SYM:PROB,... or uniform:SYMS");

  CLI::App* best = app.add_subcommand(
      "best-response", "Exhaustive same-length best response to a pattern");
  best->add_option("--a", a, "Opponent pattern")->required();
  best->add_option("--alphabet", alphabet, "SYM:PROB,... or uniform:SYMS");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Evaluate a metric over a grid of P(heads) values");
  sweep->add_option("--metric", metric,
                    "worst-case-prob | wait-difference");
  sweep->add_option("--k", k, "Pattern length")->check(CLI::PositiveNumber);
  sweep->add_option("--from", from, "Grid start (rational in (0,1))");
  sweep->add_option("--to", to, "Grid end (rational in (0,1))");
  sweep->add_option("--step", step, "Grid step (positive rational)");
  const CLI::Validator single_char(
      [](std::string& s) {
        return s.size() == 1 ? std::string() : "expected a single character";
      },
      "CHAR");
  sweep->add_option("--heads", heads, "Heads symbol")->check(single_char);
  sweep->add_option("--tails", tails, "Tails symbol")->check(single_char);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo cross-check of the closed-form results");
  simulate->add_option("--a", a, "First pattern")->required();
  simulate->add_option("--b", b, "Second pattern")->required();
  simulate->add_option("--alphabet", alphabet, "SYM:PROB,... or uniform:SYMS");
  simulate->add_option("--trials", trials, "Number of independent races")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "RNG seed");

  CLI11_PARSE(app, argc, argv);
  if (decimal_digits >= 0) global.decimal_digits = decimal_digits;
  if (wait->count("--b")) opt_b = b;

  try {
    const penney::cli::FormatOptions opts = global.to_format_options();
    std::string out;
    if (*odds)
      out = penney::cli::cmd_odds(a, b, alphabet, opts);
    else if (*wait)
      out = penney::cli::cmd_wait(a, opt_b, alphabet, opts);
    else if (*table)
      out = penney::cli::cmd_table(k, alphabet, opts);
    else if (*best)
      out = penney::cli::cmd_best_response(a, alphabet, opts);
    else if (*sweep)
      out = penney::cli::cmd_sweep(metric, k, from, to, step, heads[0],
                                   tails[0], opts);
    else if (*simulate)
      out = penney::cli::cmd_simulate(a, b, alphabet, trials, seed, opts);
    std::cout << out;
  } catch (const penney::Error& e) {
    std::cerr << "error[" << penney::errc_name(e.code()) << "]: " << e.what()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[Internal]: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
