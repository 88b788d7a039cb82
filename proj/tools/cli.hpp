#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "deckwork/enumerate.hpp"

namespace deckwork::cli {

enum class OutputFormat { kJson, kCsv, kText };

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitMalformed = 4,
  kExitBudget = 5,
  kExitInternal = 6,
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct RunConfig {
  std::string command;     // enum, decks, census, count, matrix, rank, certify, verify, legit-deck
  std::string subcommand;  // count: s|c|cstar|kocay-sum; verify: eq1|recurrence|theorem1|theorem2|kelly
  GraphKind kind = GraphKind::kUndirected;
  int n = 4;
  Predicate predicate = Predicate::kAll;
  std::optional<std::string> family_path;
  std::string family_source = "deck";  // deck|search|all, used without a family file
  OutputFormat format = OutputFormat::kJson;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
  bool slow = false;
  std::size_t trials = 100;
  bool exhaustive = false;
  bool shuffle = false;      // certify: seeded shuffle of search candidates
  bool timings = false;
  int max_length = 0;        // 0: command default
  std::string g;             // graph token
  std::string h;             // graph token
  std::string sequence;      // comma-separated tokens
  std::string cards;         // comma-separated tokens
  std::string members;       // restricts the class to these graphs
  std::optional<std::string> csv_m;
  std::optional<std::string> csv_k;
};

// Parses argv into `config`. Returns an exit code when parsing ends the run
// (help, usage errors), std::nullopt when the command should execute.
std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                              std::ostream& err);

// Rejects invalid flag combinations; the message names the offending flag.
std::optional<std::string> validate(const RunConfig& config);

// Executes the command. Reports go to `out`; machine-readable errors to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Applies DECKWORK_COVER_TABLE_MB, if set.
void apply_environment();

}  // namespace deckwork::cli
