#include "seqstr/oracle.hpp"

#include <algorithm>

namespace seqstr {

OracleResult oracle_lcsss(const SymbolSequence& x, const SymbolSequence& y) {
  const std::size_t n = y.size();
  OracleResult result;
  // Loop over y_end then y_start so occurrences come out in the documented order.
  for (std::size_t end = 1; end <= n; ++end) {
    for (std::size_t start = 0; start < end; ++start) {
      const std::size_t len = end - start;
      if (len < result.length) continue;
      if (!is_subsequence(y.slice(start, end), x.view())) continue;
      if (len > result.length) {
        result.length = len;
        result.all_matches.clear();
      }
      result.all_matches.emplace_back(start, end);
    }
  }
  if (result.length == 0) result.all_matches = {{0, 0}};
  return result;
}

std::vector<Occurrence> enumerate_optima(const SymbolSequence& x, const SymbolSequence& y) {
  return oracle_lcsss(x, y).all_matches;
}

std::size_t lcs_length(const SymbolSequence& x, const SymbolSequence& y,
                       const SolveOptions& options) {
  check_full_matrix_size(x.size(), y.size(), options);
  const std::size_t n = y.size();
  std::vector<std::size_t> prev(n + 1, 0), cur(n + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      cur[j] = (x[i - 1] == y[j - 1]) ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

std::size_t lcsubstr_length(const SymbolSequence& x, const SymbolSequence& y,
                            const SolveOptions& options) {
  check_full_matrix_size(x.size(), y.size(), options);
  const std::size_t n = y.size();
  std::vector<std::size_t> prev(n + 1, 0), cur(n + 1, 0);
  std::size_t best = 0;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      cur[j] = (x[i - 1] == y[j - 1]) ? prev[j - 1] + 1 : 0;
      best = std::max(best, cur[j]);
    }
    std::swap(prev, cur);
  }
  return best;
}

}  // namespace seqstr
