// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "invariants.hpp"
#include "seqstr/bench.hpp"
#include "seqstr/cli.hpp"
#include "seqstr/core.hpp"
#include "seqstr/oracle.hpp"

namespace {

using namespace seqstr;
using seqstr::testing::seq;
using seqstr::testing::str;

// Tolerances and thresholds.
constexpr double kExhaustiveBudgetSeconds = 30.0;
constexpr double kRandomBudgetSeconds = 60.0;
constexpr double kBenchBudgetSeconds = 60.0;
constexpr double kRatioLow = 3.0;
constexpr double kRatioHigh = 6.0;
constexpr std::size_t kAuxCellFactor = 4;

struct Verdict {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Counts instances where the reported length differs from the table maximum.
struct TableMaxAudit {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first;
};

TableMaxAudit g_table_max;

void check_pair(const SymbolSequence& x, const SymbolSequence& y, Verdict& v) {
  const MatchResult full = solve_full(x, y);
  const MatchResult rolling = solve_rolling(x, y);
  const OracleResult oracle = oracle_lcsss(x, y);
  const std::string tag = "(\"" + str(x) + "\", \"" + str(y) + "\")";

  ++g_table_max.instances;
  if (full.length != compute_matrix(x, y).max()) {
    if (g_table_max.violations++ == 0) g_table_max.first = tag;
  }

  if (full.length != oracle.length || rolling.length != oracle.length) {
    v.fail("length mismatch on " + tag);
    return;
  }
  if (!(full == rolling)) v.fail("full and rolling disagree on " + tag);
  for (const MatchResult* r : {&full, &rolling}) {
    if (auto why = seqstr::testing::check_result(x, y, *r); !why.empty()) {
      v.fail(why + " on " + tag);
    }
    const Occurrence occ{r->y_start, r->y_end};
    bool listed = false;
    for (const auto& o : oracle.all_matches) listed = listed || o == occ;
    if (!listed) v.fail("chosen occurrence not among optima on " + tag);
  }
}

Verdict exhaustive_binary() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const auto strings = seqstr::testing::all_strings("ab", 6);
  std::size_t pairs = 0;
  for (const auto& xs : strings) {
    const auto x = seq(xs);
    for (const auto& ys : strings) {
      check_pair(x, seq(ys), v);
      ++pairs;
    }
  }
  const double secs = seconds_since(t0);
  if (pairs != 127u * 127u) v.fail("expected 16129 pairs, got " + std::to_string(pairs));
  if (secs >= kExhaustiveBudgetSeconds) v.fail("took " + std::to_string(secs) + " s");
  if (v.ok) v.detail = std::to_string(pairs) + " pairs in " + std::to_string(secs) + " s";
  return v;
}

Verdict randomized() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  const std::size_t alphabets[] = {1, 2, 4, 26};
  constexpr int kPairs = 10000;
  for (int t = 0; t < kPairs; ++t) {
    const std::size_t alpha = alphabets[t % 4];
    const auto x = seq(seqstr::testing::random_string(rng, rng() % 31, alpha));
    const auto y = seq(seqstr::testing::random_string(rng, rng() % 31, alpha));
    check_pair(x, y, v);
  }
  const double secs = seconds_since(t0);
  if (secs >= kRandomBudgetSeconds) v.fail("took " + std::to_string(secs) + " s");
  if (v.ok) v.detail = std::to_string(kPairs) + " pairs in " + std::to_string(secs) + " s";
  return v;
}

Verdict recurrence_audit() {
  Verdict v;
  std::mt19937_64 rng(4040);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t alpha = 1 + rng() % 4;
    const auto x = seq(seqstr::testing::random_string(rng, rng() % 41, alpha));
    const auto y = seq(seqstr::testing::random_string(rng, rng() % 41, alpha));
    const DpMatrix w = compute_matrix(x, y);
    if (auto why = seqstr::testing::check_matrix(x, y, w); !why.empty()) {
      v.fail(why + " on (\"" + str(x) + "\", \"" + str(y) + "\")");
    }
    if (solve_full(x, y).length != w.max()) v.fail("table max differs from result");
  }
  // The mismatch rule copies W(i-1, j); classic LCS would take max(W(i-1,j), W(i,j-1)).
  const DpMatrix w = compute_matrix(seq("a"), seq("ab"));
  const Cell lcs_rule = std::max(w(0, 2), w(1, 1));
  if (w(1, 2) != 0) v.fail("W(1,2) for (\"a\",\"ab\") is " + std::to_string(w(1, 2)));
  if (lcs_rule != 1 || lcs_rule == w(1, 2)) v.fail("LCS max-rule does not differ on (\"a\",\"ab\")");
  if (v.ok) v.detail = "1000 matrices; W(1,2)=0 vs LCS rule 1 on (\"a\",\"ab\")";
  return v;
}

Verdict table_max_audit() {
  Verdict v;
  if (g_table_max.instances == 0) v.fail("no instances audited");
  if (g_table_max.violations) {
    v.fail(std::to_string(g_table_max.violations) + " violations, first " + g_table_max.first);
  }
  if (v.ok) v.detail = std::to_string(g_table_max.instances) + " instances";
  return v;
}

Verdict sandwich() {
  Verdict v;
  std::mt19937_64 rng(777);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t alpha = 1 + rng() % 6;
    const auto x = seq(seqstr::testing::random_string(rng, rng() % 31, alpha));
    const auto y = seq(seqstr::testing::random_string(rng, rng() % 31, alpha));
    const std::size_t mid = solve_rolling(x, y).length;
    if (lcsubstr_length(x, y) > mid || mid > lcs_length(x, y)) {
      v.fail("inequality fails on (\"" + str(x) + "\", \"" + str(y) + "\")");
    }
  }
  const std::size_t forward = solve_full(seq("abcde"), seq("ace")).length;
  const std::size_t backward = solve_full(seq("ace"), seq("abcde")).length;
  if (forward != 3 || backward != 1) {
    v.fail("asymmetry witness gave " + std::to_string(forward) + " vs " + std::to_string(backward));
  }
  if (v.ok) v.detail = "1000 pairs; (\"abcde\",\"ace\") -> 3, (\"ace\",\"abcde\") -> 1";
  return v;
}

Verdict complexity() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const BenchReport report = time_scaling(2000, 2000, 1, 4, 1);
  const double secs = seconds_since(t0);
  double ratio = -1;
  for (const auto& r : report.ratios) {
    if (r.from_m == 2000 && r.from_n == 2000 && r.to_m == 4000 && r.to_n == 4000) ratio = r.ratio;
  }
  std::ostringstream d;
  d << "(4000,4000)/(2000,2000) = " << ratio << ", bench " << secs << " s";
  if (ratio < kRatioLow || ratio > kRatioHigh) v.fail(d.str());
  if (secs >= kBenchBudgetSeconds) v.fail(d.str());
  if (v.ok) v.detail = d.str();
  return v;
}

Verdict space() {
  Verdict v;
  const auto [x, y] = gen_random(50000, 1000, 4, 3);
  AuxAccount account;
  const MatchResult r = solve_rolling(x, y, &account);
  const std::size_t bound = kAuxCellFactor * (y.size() + 1);
  if (account.peak_cells > bound) {
    v.fail("aux cells " + std::to_string(account.peak_cells) + " > " + std::to_string(bound));
  }
  if (auto why = seqstr::testing::check_result(x, y, r); !why.empty()) v.fail(why);

  bool refused = false;
  try {
    solve_full(x, y, SolveOptions{1'000'000});
  } catch (const SizeLimitExceeded&) {
    refused = true;
  }
  if (!refused) v.fail("full mode did not refuse under a 1e6-cell limit");
  if (v.ok) {
    v.detail = "peak aux " + std::to_string(account.peak_cells) + " <= " + std::to_string(bound) +
               " cells; full mode refused at limit 1000000";
  }
  return v;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "seqstr");
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run(args, {in, out, err});
  return {code, out.str()};
}

Verdict cli_golden() {
  Verdict v;
  const CliRun c = cli({"compare", "--x", "abcde", "--y", "ace", "--output", "json"});
  const std::string expect_json =
      "{\"length\":3,\"match\":\"ace\",\"y_start\":0,\"y_end\":3,\"x_witness\":null,"
      "\"mode\":\"full\",\"m\":5,\"n\":3}\n";
  if (c.code != 0 || c.out != expect_json) v.fail("compare json: " + c.out);

  const CliRun m = cli({"matrix", "--x", "ab", "--y", "ba", "--no-header"});
  if (m.code != 0 || m.out != "0\t0\t0\n0\t0\t1\n0\t1\t1\n") v.fail("matrix rows: " + m.out);

  struct Expect {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Expect> codes{
      {{"compare", "--x", "xyz", "--y", "abc"}, cli::kExitOk},
      {{"compare", "--x", "abc"}, cli::kExitUsage},
      {{"compare", "--x-file", "/nonexistent/seqstr", "--y", "a"}, cli::kExitInput},
      {{"compare", "--x", "abc", "--y", "abc", "--mode", "full", "--size-limit", "15"},
       cli::kExitSizeLimit},
      {{"matrix", "--x", "abc", "--y", "abc", "--size-limit", "15"}, cli::kExitSizeLimit},
      {{"oracle", "--x", "a", "--y", std::string(201, 'a')}, cli::kExitOracleCap},
  };
  for (const auto& e : codes) {
    const CliRun r = cli(e.args);
    if (r.code != e.code) {
      v.fail("exit " + std::to_string(r.code) + " != " + std::to_string(e.code) + " for " +
             e.args[0] + " " + e.args[1]);
    }
  }
  if (v.ok) v.detail = "compare json, matrix rows, exit codes 0/2/3/4/5";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"exhaustive oracle equivalence ({a,b}, |X|,|Y| <= 6)", exhaustive_binary},
      {"randomized oracle equivalence (10000 pairs)", randomized},
      {"recurrence audit", recurrence_audit},
      {"result length equals table maximum", table_max_audit},
      {"sandwich inequality and asymmetry", sandwich},
      {"O(mn) time scaling", complexity},
      {"rolling auxiliary space", space},
      {"CLI golden output and exit codes", cli_golden},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const Verdict v = run();
    std::cout << (v.ok ? "PASS" : "FAIL") << "  " << name << "  [" << v.detail << "]\n";
    failed += !v.ok;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed\n"
                       : std::string("acceptance: all criteria passed\n"));
  return failed ? 1 : 0;
}
