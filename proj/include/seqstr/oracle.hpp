#pragma once

// Reference solvers used to check the core DP: a brute-force LCSSS solver and
// the two classic quadratic baselines that bound it from either side.

#include <cstddef>
#include <utility>
#include <vector>

#include "seqstr/core.hpp"

namespace seqstr {

// Half-open [y_start, y_end) occurrence in Y.
using Occurrence = std::pair<std::size_t, std::size_t>;

struct OracleResult {
  std::size_t length = 0;
  // Every optimal occurrence, sorted by y_end then y_start. A zero-length
  // answer lists only the canonical (0, 0).
  std::vector<Occurrence> all_matches;
};

// Tries every substring of Y against X. O(n^2 m); intended for n up to ~200.
OracleResult oracle_lcsss(const SymbolSequence& x, const SymbolSequence& y);

std::vector<Occurrence> enumerate_optima(const SymbolSequence& x, const SymbolSequence& y);

// Classic longest common subsequence length.
std::size_t lcs_length(const SymbolSequence& x, const SymbolSequence& y,
                       const SolveOptions& options = {});

// Classic longest common substring length.
std::size_t lcsubstr_length(const SymbolSequence& x, const SymbolSequence& y,
                            const SolveOptions& options = {});

}  // namespace seqstr
