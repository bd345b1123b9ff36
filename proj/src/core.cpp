#include "seqstr/core.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace seqstr {

namespace {

// W(i, j) <= min(i, j), so the shorter side must fit a cell.
void check_cell_width(std::size_t m, std::size_t n) {
  if (std::min(m, n) > std::numeric_limits<Cell>::max()) {
    throw Error("input too long for 32-bit cells");
  }
}

MatchResult make_result(const SymbolSequence& x, const SymbolSequence& y, std::size_t length,
                        std::size_t y_end) {
  MatchResult result;
  if (length == 0) {
    // Canonical empty answer, independent of |Y|.
    result.x_witness.emplace();
    return result;
  }
  result.length = length;
  result.y_end = y_end;
  result.y_start = y_end - length;
  result.match = reconstruct(y, length, y_end);
  result.x_witness = subsequence_witness(result.match, x);
  return result;
}

}  // namespace

Cell DpMatrix::max() const noexcept {
  return cells_.empty() ? 0 : *std::max_element(cells_.begin(), cells_.end());
}

bool is_subsequence(std::span<const Symbol> needle, std::span<const Symbol> haystack) noexcept {
  std::size_t k = 0;
  for (std::size_t h = 0; h < haystack.size() && k < needle.size(); ++h) {
    if (haystack[h] == needle[k]) ++k;
  }
  return k == needle.size();
}

std::optional<std::vector<std::size_t>> subsequence_witness(std::span<const Symbol> needle,
                                                            std::span<const Symbol> haystack) {
  std::vector<std::size_t> indices;
  indices.reserve(needle.size());
  for (std::size_t h = 0; h < haystack.size() && indices.size() < needle.size(); ++h) {
    if (haystack[h] == needle[indices.size()]) indices.push_back(h);
  }
  if (indices.size() != needle.size()) return std::nullopt;
  return indices;
}

std::size_t full_matrix_cells(std::size_t m, std::size_t n) noexcept {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  if (m == kMax || n == kMax) return kMax;
  if (n + 1 != 0 && m + 1 > kMax / (n + 1)) return kMax;
  return (m + 1) * (n + 1);
}

void check_full_matrix_size(std::size_t m, std::size_t n, const SolveOptions& options) {
  const std::size_t cells = full_matrix_cells(m, n);
  if (cells > options.size_limit) throw SizeLimitExceeded(cells, options.size_limit);
}

DpMatrix compute_matrix(const SymbolSequence& x, const SymbolSequence& y,
                        const SolveOptions& options) {
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  check_full_matrix_size(m, n, options);
  check_cell_width(m, n);

  DpMatrix w(m + 1, n + 1);  // borders start at zero
  for (std::size_t i = 1; i <= m; ++i) {
    const Symbol xi = x[i - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      w(i, j) = (xi == y[j - 1]) ? w(i - 1, j - 1) + 1 : w(i - 1, j);
    }
  }
  return w;
}

MatchResult solve_full(const SymbolSequence& x, const SymbolSequence& y,
                       const SolveOptions& options) {
  const DpMatrix w = compute_matrix(x, y, options);

  Cell max_length = 0;
  std::size_t last_index_on_y = 0;
  for (std::size_t i = 1; i < w.rows(); ++i) {
    for (std::size_t j = 1; j < w.cols(); ++j) {
      if (w(i, j) > max_length) {
        max_length = w(i, j);
        last_index_on_y = j;
      }
    }
  }
  return make_result(x, y, max_length, last_index_on_y);
}

MatchResult solve_rolling(const SymbolSequence& x, const SymbolSequence& y, AuxAccount* account) {
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  check_cell_width(m, n);

  // row[j] holds W(i-1, j) until overwritten with W(i, j). Walking j downward
  // reads W(i-1, j-1) before it is replaced.
  std::vector<Cell> row(n + 1, 0);
  if (account) account->allocate(row.size());

  Cell max_length = 0;
  std::size_t last_index_on_y = 0;
  const std::span<const Symbol> ys = y.view();
  for (std::size_t i = 0; i < m; ++i) {
    const Symbol xi = x[i];
    Cell row_best = 0;
    std::size_t row_best_j = 0;
    for (std::size_t j = n; j >= 1; --j) {
      // Mismatch keeps W(i-1, j). Written as selects so the loop runs at the
      // same speed whatever the match rate.
      const Cell above = row[j];
      const Cell diag = row[j - 1] + 1;
      const Cell pick = Cell{0} - static_cast<Cell>(ys[j - 1] == xi);
      const Cell cell = above ^ ((above ^ diag) & pick);
      row[j] = cell;
      // ">=" while descending picks the smallest j, which is what a strict ">"
      // row-major scan would report.
      const bool take = cell >= row_best;
      row_best = take ? cell : row_best;
      row_best_j = take ? j : row_best_j;
    }
    if (row_best > max_length) {
      max_length = row_best;
      last_index_on_y = row_best_j;
    }
  }

  if (account) account->release(row.size());
  return make_result(x, y, max_length, last_index_on_y);
}

SymbolSequence reconstruct(const SymbolSequence& y, std::size_t length, std::size_t y_end) {
  if (y_end > y.size() || length > y_end) {
    throw IndexOutOfRange("reconstruct: slice [" + std::to_string(y_end) + " - " +
                          std::to_string(length) + ", " + std::to_string(y_end) +
                          ") out of range for length " + std::to_string(y.size()));
  }
  const auto s = y.slice(y_end - length, y_end);
  return SymbolSequence(std::vector<Symbol>(s.begin(), s.end()));
}

}  // namespace seqstr
