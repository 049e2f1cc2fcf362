#pragma once

#include <cstdint>
#include <vector>

namespace resilmax {

/// C(n, k), saturating: returns limit + 1 as soon as the true value would
/// exceed limit, so enumeration budgets can be tested without overflow.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                              std::uint64_t limit);

/// The k-subset of {0..n-1} with lexicographic rank `rank` (combinadic
/// unranking). Used to hand each enumeration worker its chunk start.
std::vector<int> combination_unrank(int n, int k, std::uint64_t rank);

/// Advances comb (ascending positions in {0..n-1}) to its lexicographic
/// successor. Returns false after the last combination.
bool combination_next(std::vector<int>& comb, int n);

}  // namespace resilmax
