#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seqstr/sequence.hpp"

namespace seqstr {

// Deterministic random pair from std::mt19937_64 seeded with `seed`: X is
// drawn first, then Y, each symbol 'a' + (draw mod alphabet). mt19937_64 is
// fully specified by the standard, so a (m, n, alphabet, seed) tuple names the
// same bytes on every platform. alphabet must be in [1, 159] so symbols stay
// within byte values.
std::pair<SymbolSequence, SymbolSequence> gen_random(std::size_t m, std::size_t n,
                                                     std::size_t alphabet, std::uint64_t seed);

struct BenchSample {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t alphabet = 0;
  std::uint64_t seed = 0;
  double seconds = 0.0;  // per solve, best of kBenchRepetitions
  std::string mode = "rolling";
};

struct ScalingRatio {
  std::size_t from_m = 0, from_n = 0;
  std::size_t to_m = 0, to_n = 0;
  double ratio = 0.0;  // time(to) / time(from)
};

struct BenchReport {
  std::vector<BenchSample> samples;
  std::vector<ScalingRatio> ratios;
  std::size_t peak_aux_cells = 0;
};

inline constexpr int kBenchRepetitions = 3;
// Small inputs are solved repeatedly within one repetition until it lasts at
// least this long; the sample records time per solve.
inline constexpr double kMinRepetitionSeconds = 0.05;

// Times solve_rolling at (m, n) and, for each doubling level k with
// (M, N) = (base_m, base_n) * 2^(k-1), at (2M, N), (M, 2N) and (2M, 2N).
// Ratios are taken against (M, N); (2M, 2N) / (M, N) should be near 4.
BenchReport time_scaling(std::size_t base_m, std::size_t base_n, std::size_t doublings,
                         std::size_t alphabet, std::uint64_t seed);

std::string to_json(const BenchReport& report, int indent = 2);
std::string to_text(const BenchReport& report);

}  // namespace seqstr
