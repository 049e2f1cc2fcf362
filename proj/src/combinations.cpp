#include "resilmax/combinations.hpp"

#include "resilmax/errors.hpp"

namespace resilmax {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k,
                              std::uint64_t limit) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;  // exact at every step for binomials
    if (c > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<int> combination_unrank(int n, int k, std::uint64_t rank) {
  constexpr std::uint64_t kNoCap = ~std::uint64_t{0} - 1;
  std::vector<int> comb;
  comb.reserve(static_cast<std::size_t>(k));
  int next = 0;
  for (int i = 0; i < k; ++i) {
    for (int c = next;; ++c) {
      if (c >= n) {
        throw InvalidArgumentError("combination rank out of range");
      }
      std::uint64_t below = binomial_capped(
          static_cast<std::uint64_t>(n - 1 - c),
          static_cast<std::uint64_t>(k - 1 - i), kNoCap);
      if (rank < below) {
        comb.push_back(c);
        next = c + 1;
        break;
      }
      rank -= below;
    }
  }
  return comb;
}

bool combination_next(std::vector<int>& comb, int n) {
  int k = static_cast<int>(comb.size());
  for (int i = k - 1; i >= 0; --i) {
    if (comb[static_cast<std::size_t>(i)] < n - k + i) {
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        comb[static_cast<std::size_t>(j)] =
            comb[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace resilmax
