#pragma once

// Longest common subsequence-and-substring (LCSSS): the longest string that is
// a subsequence of X and a substring of Y.
//
// Cell W(i, j) of the DP table holds the length of the longest suffix of
// Y[0..j) that is also a subsequence of X[0..i). Each candidate is anchored at
// the end of Y[0..j), so on a mismatch the cell inherits from the row above
// only; rows are not monotone.
//
// All indices reported by this module are 0-based and half-open.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "seqstr/errors.hpp"
#include "seqstr/sequence.hpp"

namespace seqstr {

using Cell = std::uint32_t;

// Default cell budget for the full table: 2^28 cells (1 GiB of 32-bit cells).
inline constexpr std::size_t kDefaultSizeLimit = std::size_t{1} << 28;

struct SolveOptions {
  std::size_t size_limit = kDefaultSizeLimit;
};

// (m+1) x (n+1) row-major table of cell values.
class DpMatrix {
 public:
  DpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Cell operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * cols_ + j]; }
  Cell& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * cols_ + j]; }

  std::span<const Cell> row(std::size_t i) const noexcept {
    return std::span<const Cell>(cells_).subspan(i * cols_, cols_);
  }

  Cell max() const noexcept;

  friend bool operator==(const DpMatrix&, const DpMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Cell> cells_;
};

struct MatchResult {
  std::size_t length = 0;
  std::size_t y_start = 0;
  std::size_t y_end = 0;
  SymbolSequence match;
  // Leftmost greedy embedding of `match` into X.
  std::optional<std::vector<std::size_t>> x_witness;

  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

// Tracks the auxiliary cells a rolling evaluation allocates.
struct AuxAccount {
  std::size_t current_cells = 0;
  std::size_t peak_cells = 0;

  void allocate(std::size_t cells) noexcept {
    current_cells += cells;
    if (current_cells > peak_cells) peak_cells = current_cells;
  }
  void release(std::size_t cells) noexcept { current_cells -= cells; }
};

// Greedy left-to-right scan, O(|haystack|).
bool is_subsequence(std::span<const Symbol> needle, std::span<const Symbol> haystack) noexcept;
inline bool is_subsequence(const SymbolSequence& needle, const SymbolSequence& haystack) noexcept {
  return is_subsequence(needle.view(), haystack.view());
}

// Leftmost embedding of needle in haystack, or nullopt if there is none.
std::optional<std::vector<std::size_t>> subsequence_witness(std::span<const Symbol> needle,
                                                            std::span<const Symbol> haystack);
inline std::optional<std::vector<std::size_t>> subsequence_witness(const SymbolSequence& needle,
                                                                   const SymbolSequence& haystack) {
  return subsequence_witness(needle.view(), haystack.view());
}

// Number of cells in the full table for |x| = m, |y| = n, saturating on overflow.
std::size_t full_matrix_cells(std::size_t m, std::size_t n) noexcept;

// Throws SizeLimitExceeded when the full table for (m, n) is over budget.
void check_full_matrix_size(std::size_t m, std::size_t n, const SolveOptions& options = {});

DpMatrix compute_matrix(const SymbolSequence& x, const SymbolSequence& y,
                        const SolveOptions& options = {});

// Evaluates the full table. Among equal maxima the first cell in row-major
// order wins. A zero-length answer is reported as y_start = y_end = 0.
MatchResult solve_full(const SymbolSequence& x, const SymbolSequence& y,
                       const SolveOptions& options = {});

// Same answer as solve_full using a single row of n + 1 cells.
MatchResult solve_rolling(const SymbolSequence& x, const SymbolSequence& y,
                          AuxAccount* account = nullptr);

// Y[y_end - length, y_end).
SymbolSequence reconstruct(const SymbolSequence& y, std::size_t length, std::size_t y_end);

}  // namespace seqstr
