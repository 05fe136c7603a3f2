#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dmp/recurrence.hpp"

namespace dmp::cli {

enum class Command { terms, gf, quasipoly, wilf, verify, bench };
enum class Format { plain, json, csv };

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kResourceCap = 3;
inline constexpr int kMismatch = 4;

// Largest n the oracle method accepts without --allow-large-oracle.
inline constexpr unsigned kOracleGuard = 60;

struct RunConfig {
  Command command = Command::terms;
  unsigned n_max = 10;
  unsigned m = 1;
  unsigned m_max = 6;
  std::optional<unsigned> degree_bound;
  Method method = Method::recurrence;
  Format format = Format::plain;
  std::size_t memo_cap = kDefaultMemoCap;
  unsigned bell_cap = 12;
  unsigned precision = 30;
  unsigned threads = 1;
  std::uint64_t residue_limit = 5040;
  bool allow_large_oracle = false;
};

// Throws std::invalid_argument describing the first violated constraint.
void validate(const RunConfig& config);

// Executes one command; returns an exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and runs it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dmp::cli
