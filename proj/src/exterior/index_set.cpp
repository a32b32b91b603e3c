#include "evtp/exterior/index_set.hpp"

#include <stdexcept>
#include <string>

#include "evtp/core/error.hpp"

namespace evtp {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    // result * num / i is exact at every step because result == C(n-k+i-1, i-1).
    if (result > UINT64_MAX / num) throw std::overflow_error("binomial coefficient overflows 64 bits");
    result = result * num / i;
  }
  return result;
}

std::size_t lex_rank(std::span<const std::size_t> elems, std::size_t n) {
  const std::size_t j = elems.size();
  if (j == 0 || j > n) throw DimensionError("index set size must be in [1, n]");
  std::size_t rank = 0;
  std::size_t previous = 0;
  for (std::size_t p = 0; p < j; ++p) {
    const std::size_t e = elems[p];
    if (e < 1 || e > n) throw DimensionError("index " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
    if (e <= previous) throw DimensionError("index set must be strictly increasing");
    // Every subset that agrees on the first p entries and has a smaller
    // entry v at position p precedes this one.
    for (std::size_t v = previous + 1; v < e; ++v) rank += binomial(n - v, j - p - 1);
    previous = e;
  }
  return rank;
}

std::vector<std::size_t> lex_unrank(std::size_t rank, std::size_t n, std::size_t j) {
  if (j == 0 || j > n) throw DimensionError("index set size must be in [1, n]");
  if (rank >= binomial(n, j)) throw DimensionError("rank out of range");
  std::vector<std::size_t> elems;
  elems.reserve(j);
  std::size_t v = 1;
  for (std::size_t p = 0; p < j; ++p) {
    for (;; ++v) {
      const std::size_t block = binomial(n - v, j - p - 1);
      if (rank < block) break;
      rank -= block;
    }
    elems.push_back(v++);
  }
  return elems;
}

std::vector<IndexSet> lex_subsets(std::size_t n, std::size_t j) {
  if (j == 0 || j > n) throw DimensionError("index set size must be in [1, n]");
  std::vector<IndexSet> out;
  out.reserve(binomial(n, j));
  std::vector<std::size_t> cur(j);
  for (std::size_t i = 0; i < j; ++i) cur[i] = i + 1;
  for (std::size_t rank = 0;; ++rank) {
    out.push_back({n, cur, rank});
    // Advance to the next subset: bump the rightmost entry that has room.
    std::size_t p = j;
    while (p > 0 && cur[p - 1] == n - j + p) --p;
    if (p == 0) break;
    ++cur[p - 1];
    for (std::size_t q = p; q < j; ++q) cur[q] = cur[q - 1] + 1;
  }
  return out;
}

}  // namespace evtp
