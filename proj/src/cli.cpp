#include "seqstr/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqstr/bench.hpp"
#include "seqstr/core.hpp"
#include "seqstr/errors.hpp"
#include "seqstr/oracle.hpp"

namespace seqstr::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kIndexNote =
    "All indices are 0-based and half-open: the match is Y[y_start, y_end).";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string dump(const ordered_json& j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

const char* mode_name(SolveMode mode) {
  switch (mode) {
    case SolveMode::full: return "full";
    case SolveMode::rolling: return "rolling";
    case SolveMode::automatic: break;
  }
  return "auto";
}

struct Inputs {
  SymbolSequence x;
  SymbolSequence y;
};

Inputs load_inputs(const CliConfig& config, std::istream& in) {
  return {read_input(config.x, in), read_input(config.y, in)};
}

std::string join_indices(const std::vector<std::size_t>& v, char sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s.push_back(sep);
    s += std::to_string(v[k]);
  }
  return s;
}

std::size_t size_limit_from_env() {
  const char* env = std::getenv("SEQSTR_SIZE_LIMIT");
  if (!env || !*env) return kDefaultSizeLimit;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size()) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("SEQSTR_SIZE_LIMIT is not a cell count: ") + env);
  }
}

// Maps library errors onto exit codes. `body` returns the success code.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << " (use --mode rolling or raise --size-limit)\n";
    return kExitSizeLimit;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidEncoding& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const EmptyFasta& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const RecordNotFound& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int run_compare(const CliConfig& config, Streams io) {
  return guarded(io.err, [&] {
    const Inputs in = load_inputs(config, io.in);
    const SolveOptions options{config.size_limit};

    SolveMode used = config.mode;
    if (used == SolveMode::automatic) {
      used = full_matrix_cells(in.x.size(), in.y.size()) <= config.size_limit ? SolveMode::full
                                                                               : SolveMode::rolling;
    }
    const MatchResult r =
        used == SolveMode::full ? solve_full(in.x, in.y, options) : solve_rolling(in.x, in.y);
    const std::string match = encode(r.match, config.y.symbol_mode);
    const bool witness = config.emit_witness && r.x_witness.has_value();

    switch (config.output) {
      case OutputFormat::json: {
        ordered_json j;
        j["length"] = r.length;
        j["match"] = match;
        j["y_start"] = r.y_start;
        j["y_end"] = r.y_end;
        j["x_witness"] = witness ? ordered_json(*r.x_witness) : ordered_json(nullptr);
        j["mode"] = mode_name(used);
        j["m"] = in.x.size();
        j["n"] = in.y.size();
        io.out << dump(j) << '\n';
        break;
      }
      case OutputFormat::tsv:
        io.out << "length\tmatch\ty_start\ty_end\tx_witness\tmode\tm\tn\n"
               << r.length << '\t' << match << '\t' << r.y_start << '\t' << r.y_end << '\t'
               << (witness ? join_indices(*r.x_witness, ',') : std::string("-")) << '\t'
               << mode_name(used) << '\t' << in.x.size() << '\t' << in.y.size() << '\n';
        break;
      case OutputFormat::text:
        io.out << "length:  " << r.length << '\n'
               << "match:   " << match << '\n'
               << "y_start: " << r.y_start << '\n'
               << "y_end:   " << r.y_end << '\n'
               << "mode:    " << mode_name(used) << '\n'
               << "m:       " << in.x.size() << '\n'
               << "n:       " << in.y.size() << '\n';
        if (witness) io.out << "x_witness: " << join_indices(*r.x_witness, ' ') << '\n';
        break;
    }
    return kExitOk;
  });
}

int run_matrix(const CliConfig& config, Streams io) {
  return guarded(io.err, [&] {
    const Inputs in = load_inputs(config, io.in);
    const DpMatrix w = compute_matrix(in.x, in.y, SolveOptions{config.size_limit});

    if (config.output == OutputFormat::json) {
      ordered_json j;
      j["m"] = in.x.size();
      j["n"] = in.y.size();
      j["rows"] = ordered_json::array();
      for (std::size_t i = 0; i < w.rows(); ++i) {
        const auto row = w.row(i);
        j["rows"].push_back(std::vector<Cell>(row.begin(), row.end()));
      }
      io.out << dump(j) << '\n';
      return kExitOk;
    }

    if (config.matrix_header) {
      io.out << "i\\j";
      for (std::size_t j = 0; j < w.cols(); ++j) io.out << '\t' << j;
      io.out << '\n';
    }
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (config.matrix_header) io.out << i << '\t';
      const auto row = w.row(i);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) io.out << '\t';
        io.out << row[j];
      }
      io.out << '\n';
    }
    return kExitOk;
  });
}

int run_oracle(const CliConfig& config, Streams io) {
  return guarded(io.err, [&] {
    const Inputs in = load_inputs(config, io.in);
    if (in.y.size() > config.oracle_cap) {
      io.err << "error: |Y| = " << in.y.size() << " exceeds oracle cap " << config.oracle_cap
             << " (raise it with --oracle-cap)\n";
      return kExitOracleCap;
    }
    const OracleResult r = oracle_lcsss(in.x, in.y);

    switch (config.output) {
      case OutputFormat::json: {
        ordered_json j;
        j["length"] = r.length;
        j["all_matches"] = ordered_json::array();
        for (const auto& [s, e] : r.all_matches) j["all_matches"].push_back({s, e});
        j["m"] = in.x.size();
        j["n"] = in.y.size();
        io.out << dump(j) << '\n';
        break;
      }
      case OutputFormat::tsv:
        io.out << "y_start\ty_end\tlength\tmatch\n";
        for (const auto& [s, e] : r.all_matches) {
          io.out << s << '\t' << e << '\t' << r.length << '\t'
                 << encode(reconstruct(in.y, e - s, e), config.y.symbol_mode) << '\n';
        }
        break;
      case OutputFormat::text:
        io.out << "length: " << r.length << '\n' << "occurrences:";
        for (const auto& [s, e] : r.all_matches) io.out << " (" << s << "," << e << ")";
        io.out << '\n';
        break;
    }
    return kExitOk;
  });
}

int run_bench(const CliConfig& config, Streams io) {
  return guarded(io.err, [&] {
    const BenchOptions& b = config.bench;
    const BenchReport report = time_scaling(b.base_m, b.base_n, b.doublings, b.alphabet, b.seed);
    if (config.output == OutputFormat::json) {
      io.out << to_json(report) << '\n';
    } else {
      io.out << to_text(report);
    }
    return kExitOk;
  });
}

namespace {

struct SideFlags {
  std::optional<std::string> inline_text;
  std::optional<std::string> file;
  std::optional<std::string> record;
};

InputSpec make_spec(const SideFlags& side, const char* name, InputFormat format, SymbolMode symbols,
                    const std::optional<std::string>& shared_record) {
  if (side.inline_text && side.file) {
    throw UsageError(std::string("give only one of --") + name + " and --" + name + "-file");
  }
  if (!side.inline_text && !side.file) {
    throw UsageError(std::string("missing input ") + (name[0] == 'x' ? "X" : "Y") + ": use --" +
                     name + " <text> or --" + name + "-file <path>");
  }
  InputSpec spec;
  if (side.inline_text) {
    spec.source = InlineSource{*side.inline_text};
  } else if (*side.file == "-") {
    spec.source = StdinSource{};
  } else {
    spec.source = FileSource{*side.file};
  }
  spec.format = format;
  spec.symbol_mode = symbols;
  spec.fasta_record = side.record ? side.record : shared_record;
  return spec;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Longest common subsequence-and-substring: the longest string that is a "
               "subsequence of X and a substring of Y.",
               "seqstr"};
  app.footer(kIndexNote);
  app.require_subcommand(1);

  CliConfig config;
  SideFlags xs, ys;
  InputFormat format = InputFormat::plain;
  SymbolMode symbols = SymbolMode::byte;
  std::optional<std::string> record;
  std::optional<std::size_t> size_limit;

  const std::map<std::string, InputFormat> formats{{"plain", InputFormat::plain},
                                                   {"fasta", InputFormat::fasta}};
  const std::map<std::string, SymbolMode> symbol_modes{{"byte", SymbolMode::byte},
                                                       {"codepoint", SymbolMode::codepoint}};
  const std::map<std::string, SolveMode> modes{{"auto", SolveMode::automatic},
                                               {"full", SolveMode::full},
                                               {"rolling", SolveMode::rolling}};
  const std::map<std::string, OutputFormat> outputs{
      {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"tsv", OutputFormat::tsv}};

  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--x", xs.inline_text, "X as an inline literal");
    sub->add_option("--y", ys.inline_text, "Y as an inline literal");
    sub->add_option("--x-file", xs.file, "read X from a file ('-' for stdin)");
    sub->add_option("--y-file", ys.file, "read Y from a file ('-' for stdin)");
    sub->add_option("--format", format, "input format: plain|fasta")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""));
    sub->add_option("--symbols", symbols, "symbol mode: byte|codepoint (UTF-8)")
        ->transform(CLI::CheckedTransformer(symbol_modes, CLI::ignore_case).description(""));
    sub->add_option("--fasta-record", record, "FASTA record id used for both inputs");
    sub->add_option("--x-record", xs.record, "FASTA record id for X");
    sub->add_option("--y-record", ys.record, "FASTA record id for Y");
    sub->add_option("--size-limit", size_limit,
                    "full-matrix cell budget (default $SEQSTR_SIZE_LIMIT or 2^28)");
    sub->footer(kIndexNote);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", config.output, "output format: text|json|tsv")
        ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case).description(""));
  };

  CLI::App* compare = app.add_subcommand("compare", "report the longest answer");
  add_inputs(compare);
  add_output(compare);
  compare->add_option("--mode", config.mode, "auto|full|rolling (auto: full when within limit)")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case).description(""));
  compare->add_flag("--witness", config.emit_witness, "also report indices of the match in X");

  CLI::App* matrix = app.add_subcommand("matrix", "dump the (m+1)x(n+1) DP table as TSV");
  add_inputs(matrix);
  add_output(matrix);
  bool no_header = false;
  matrix->add_flag("--no-header", no_header, "omit the index header row and column");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force answer with every optimal occurrence");
  add_inputs(oracle);
  add_output(oracle);
  oracle->add_option("--oracle-cap", config.oracle_cap, "largest |Y| the oracle accepts");

  CLI::App* bench = app.add_subcommand("bench", "time the rolling solver on doubled sizes");
  bench->add_option("--base-m", config.bench.base_m, "base |X|");
  bench->add_option("--base-n", config.bench.base_n, "base |Y|");
  bench->add_option("--doublings", config.bench.doublings, "number of doubling levels");
  bench->add_option("--alphabet", config.bench.alphabet, "alphabet size, symbols from 'a'")
      ->check(CLI::Range(std::size_t{1}, std::size_t{159}));
  bench->add_option("--seed", config.bench.seed, "generator seed (std::mt19937_64)");
  bench->add_option("--output", config.output, "output format: text|json")
      ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case).description(""));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  return guarded(io.err, [&] {
    config.size_limit = size_limit ? *size_limit : size_limit_from_env();
    config.matrix_header = !no_header;
    if (active == bench) {
      config.command = Command::bench;
      return run_bench(config, io);
    }
    try {
      config.x = make_spec(xs, "x", format, symbols, record);
      config.y = make_spec(ys, "y", format, symbols, record);
      if (std::holds_alternative<StdinSource>(config.x.source) &&
          std::holds_alternative<StdinSource>(config.y.source)) {
        throw UsageError("only one of X and Y can be read from stdin");
      }
    } catch (const UsageError& e) {
      io.err << "error: " << e.what() << "\n\n" << active->help();
      return kExitUsage;
    }
    if (active == compare) {
      config.command = Command::compare;
      return run_compare(config, io);
    }
    if (active == matrix) {
      config.command = Command::matrix;
      return run_matrix(config, io);
    }
    config.command = Command::oracle;
    return run_oracle(config, io);
  });
}

}  // namespace seqstr::cli
