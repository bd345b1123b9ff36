#include "seqstr/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "seqstr/core.hpp"

namespace seqstr {

namespace {

constexpr std::size_t kMaxAlphabet = 256 - 'a';

SymbolSequence draw(std::mt19937_64& rng, std::size_t len, std::size_t alphabet) {
  std::vector<Symbol> out(len);
  for (auto& s : out) s = static_cast<Symbol>('a' + rng() % alphabet);
  return SymbolSequence(std::move(out));
}

double seconds_between(std::chrono::steady_clock::time_point a,
                       std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

struct Config {
  std::size_t m, n;
  SymbolSequence x, y;
  std::size_t batch = 1;
  double best = std::numeric_limits<double>::infinity();
  std::size_t peak_aux_cells = 0;
};

// One warm-up solve faults in the inputs and sizes the batch so a single
// repetition lasts at least kMinRepetitionSeconds.
void warm_up(Config& c) {
  const auto t0 = std::chrono::steady_clock::now();
  volatile std::size_t sink = solve_rolling(c.x, c.y).length;
  (void)sink;
  const double warm = seconds_between(t0, std::chrono::steady_clock::now());
  c.batch = static_cast<std::size_t>(
      std::max(1.0, std::ceil(kMinRepetitionSeconds / std::max(warm, 1e-9))));
}

void time_once(Config& c) {
  AuxAccount account;
  volatile std::size_t sink = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t k = 0; k < c.batch; ++k) sink = solve_rolling(c.x, c.y, &account).length;
  const double per_solve = seconds_between(t0, std::chrono::steady_clock::now()) / c.batch;
  (void)sink;
  c.best = std::min(c.best, per_solve);
  c.peak_aux_cells = std::max(c.peak_aux_cells, account.peak_cells);
}

}  // namespace

std::pair<SymbolSequence, SymbolSequence> gen_random(std::size_t m, std::size_t n,
                                                     std::size_t alphabet, std::uint64_t seed) {
  if (alphabet == 0 || alphabet > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in [1, " + std::to_string(kMaxAlphabet) +
                                "]");
  }
  std::mt19937_64 rng(seed);
  SymbolSequence x = draw(rng, m, alphabet);
  SymbolSequence y = draw(rng, n, alphabet);
  return {std::move(x), std::move(y)};
}

BenchReport time_scaling(std::size_t base_m, std::size_t base_n, std::size_t doublings,
                         std::size_t alphabet, std::uint64_t seed) {
  std::vector<Config> configs;
  auto index_of = [&](std::size_t m, std::size_t n) {
    for (std::size_t k = 0; k < configs.size(); ++k) {
      if (configs[k].m == m && configs[k].n == n) return k;
    }
    auto [x, y] = gen_random(m, n, alphabet, seed);
    configs.push_back({m, n, std::move(x), std::move(y)});
    return configs.size() - 1;
  };

  struct Pair {
    std::size_t from, to;
  };
  std::vector<Pair> pairs;
  index_of(base_m, base_n);
  std::size_t m = base_m, n = base_n;
  for (std::size_t level = 0; level < doublings; ++level) {
    const std::size_t from = index_of(m, n);
    for (const auto& [tm, tn] : {std::pair{2 * m, n}, {m, 2 * n}, {2 * m, 2 * n}}) {
      pairs.push_back({from, index_of(tm, tn)});
    }
    m *= 2;
    n *= 2;
  }

  for (Config& c : configs) warm_up(c);
  // Repetitions are interleaved across configurations so a slow spell on the
  // host does not land on every repetition of one configuration.
  for (int rep = 0; rep < kBenchRepetitions; ++rep) {
    for (Config& c : configs) time_once(c);
  }

  BenchReport report;
  for (const Config& c : configs) {
    report.samples.push_back({c.m, c.n, alphabet, seed, c.best, "rolling"});
    report.peak_aux_cells = std::max(report.peak_aux_cells, c.peak_aux_cells);
  }
  for (const Pair& p : pairs) {
    const Config& a = configs[p.from];
    const Config& b = configs[p.to];
    report.ratios.push_back({a.m, a.n, b.m, b.n, a.best > 0 ? b.best / a.best : 0.0});
  }
  return report;
}

std::string to_json(const BenchReport& report, int indent) {
  nlohmann::json j;
  j["samples"] = nlohmann::json::array();
  for (const auto& s : report.samples) {
    j["samples"].push_back({{"m", s.m},
                            {"n", s.n},
                            {"alphabet", s.alphabet},
                            {"seed", s.seed},
                            {"seconds", s.seconds},
                            {"mode", s.mode}});
  }
  j["ratios"] = nlohmann::json::array();
  for (const auto& r : report.ratios) {
    j["ratios"].push_back({{"from", {r.from_m, r.from_n}}, {"to", {r.to_m, r.to_n}}, {"ratio", r.ratio}});
  }
  j["peak_aux_cells"] = report.peak_aux_cells;
  return j.dump(indent);
}

std::string to_text(const BenchReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6);
  out << "m\tn\talphabet\tseed\tseconds\tmode\n";
  for (const auto& s : report.samples) {
    out << s.m << '\t' << s.n << '\t' << s.alphabet << '\t' << s.seed << '\t' << s.seconds << '\t'
        << s.mode << '\n';
  }
  out << std::setprecision(3);
  for (const auto& r : report.ratios) {
    out << "ratio (" << r.to_m << "," << r.to_n << ")/(" << r.from_m << "," << r.from_n
        << ") = " << r.ratio << '\n';
  }
  out << "peak_aux_cells " << report.peak_aux_cells << '\n';
  return out.str();
}

}  // namespace seqstr
