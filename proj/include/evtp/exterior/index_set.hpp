#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace evtp {

/// A j-element subset of [n] = {1, ..., n} (1-based, strictly increasing)
/// together with its 0-based position in the lexicographic enumeration of
/// all j-subsets of [n]. Compound matrices and exterior products are
/// indexed by these ranks.
struct IndexSet {
  std::size_t n = 0;
  std::vector<std::size_t> elems;
  std::size_t rank = 0;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

/// C(n, k); zero when k > n. Throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::size_t n, std::size_t k);

std::size_t lex_rank(std::span<const std::size_t> elems, std::size_t n);
std::vector<std::size_t> lex_unrank(std::size_t rank, std::size_t n, std::size_t j);

/// All j-subsets of [n] in lexicographic order (so element r has rank r).
std::vector<IndexSet> lex_subsets(std::size_t n, std::size_t j);

}  // namespace evtp
