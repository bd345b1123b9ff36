#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seqstr/ingest.hpp"

namespace seqstr::cli {

enum class Command { compare, matrix, oracle, bench };
enum class SolveMode { automatic, full, rolling };
enum class OutputFormat { text, json, tsv };

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitSizeLimit = 4;
inline constexpr int kExitOracleCap = 5;

inline constexpr std::size_t kDefaultOracleCap = 200;

struct BenchOptions {
  std::size_t base_m = 2000;
  std::size_t base_n = 2000;
  std::size_t doublings = 1;
  std::size_t alphabet = 4;
  std::uint64_t seed = 1;
};

struct CliConfig {
  Command command = Command::compare;
  InputSpec x;
  InputSpec y;
  SolveMode mode = SolveMode::automatic;
  OutputFormat output = OutputFormat::text;
  bool emit_witness = false;
  std::size_t size_limit = 0;
  std::size_t oracle_cap = kDefaultOracleCap;
  bool matrix_header = true;
  BenchOptions bench;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

int run_compare(const CliConfig& config, Streams io);
int run_matrix(const CliConfig& config, Streams io);
int run_oracle(const CliConfig& config, Streams io);
int run_bench(const CliConfig& config, Streams io);

// Parses argv (argv[0] is the program name) and dispatches. Returns the exit code.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace seqstr::cli
