#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "penney/sim.hpp"
#include "penney/solver.hpp"

// Command implementations live in the library so tests can drive them
// directly; tools/ only does flag parsing and exit-code mapping. Every
// function returns the fully rendered output (newline terminated) or throws
// penney::Error.
namespace penney::cli {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(std::string_view name);  // "text" | "json" | "csv"

struct FormatOptions {
  OutputFormat format = OutputFormat::Text;
  // Unset: fractions first, decimals rendered at 6 places with trailing
  // zeros trimmed. Set: exactly N places everywhere a decimal appears, and
  // table/sweep cells switch from fractions to decimals.
  std::optional<int> decimal_digits;
  bool self_check = false;
};

// "SYM:PROB,SYM:PROB,..." with PROB a fraction or finite decimal, or
// "uniform:SYMBOLS" where SYMBOLS may use ranges like "A..Z".
Alphabet parse_alphabet_spec(std::string_view spec);

std::string cmd_odds(const std::string& a, const std::string& b,
                     const std::string& alphabet_spec,
                     const FormatOptions& opts);

// Without b: expected waiting time for `a` alone.
std::string cmd_wait(const std::string& a, const std::optional<std::string>& b,
                     const std::string& alphabet_spec,
                     const FormatOptions& opts);

std::string cmd_table(std::size_t k, const std::string& alphabet_spec,
                      const FormatOptions& opts);

std::string cmd_best_response(const std::string& a,
                              const std::string& alphabet_spec,
                              const FormatOptions& opts);

std::string cmd_sweep(const std::string& metric_name, std::size_t k,
                      const std::optional<std::string>& from,
                      const std::optional<std::string>& to,
                      const std::optional<std::string>& step, char heads,
                      char tails, const FormatOptions& opts);

std::string cmd_simulate(const std::string& a, const std::string& b,
                         const std::string& alphabet_spec,
                         std::uint64_t trials, std::uint64_t seed,
                         const FormatOptions& opts);

}  // namespace penney::cli
