#include "resilmax/adversary.hpp"

#include <algorithm>
#include <string>

#include "resilmax/combinations.hpp"
#include "resilmax/errors.hpp"
#include "resilmax/parallel.hpp"

namespace resilmax {

namespace {

// Enumeration below this size is cheaper than spawning workers.
constexpr std::uint64_t kParallelThreshold = 2048;

struct Candidate {
  Value value = 0.0;
  ElementSet removed;
  bool valid = false;

  // Total order: value first, removed set lexicographically second. Using
  // it for every reduction makes the minimizer independent of enumeration
  // chunking.
  bool better_than(const Candidate& other) const {
    if (!other.valid) return valid;
    if (!valid) return false;
    if (value != other.value) return value < other.value;
    return removed < other.removed;
  }
};

ElementSet pick(const ElementSet& A, const std::vector<int>& positions) {
  std::vector<ElementId> ids;
  ids.reserve(positions.size());
  for (int p : positions) {
    ids.push_back(A.ids()[static_cast<std::size_t>(p)]);
  }
  return ElementSet::from_unsorted(std::move(ids));
}

Candidate scan_range(const Objective& f, const ElementSet& A, int k,
                     std::uint64_t begin, std::uint64_t end) {
  int m = static_cast<int>(A.size());
  Candidate best;
  std::vector<int> positions = combination_unrank(m, k, begin);
  for (std::uint64_t r = begin; r < end; ++r) {
    Candidate c;
    c.removed = pick(A, positions);
    c.value = f.evaluate(A.set_minus(c.removed));
    c.valid = true;
    if (c.better_than(best)) best = std::move(c);
    if (r + 1 < end) combination_next(positions, m);
  }
  return best;
}

}  // namespace

RemovalResult worst_case_removal_exact(const Objective& f, const ElementSet& A,
                                       int alpha, std::uint64_t cap) {
  if (alpha < 0) throw InvalidArgumentError("alpha must be nonnegative");
  int k = std::min<int>(alpha, static_cast<int>(A.size()));
  std::uint64_t count = binomial_capped(A.size(), static_cast<std::uint64_t>(k),
                                        cap);
  if (count > cap) {
    throw BudgetExceededError("removal enumeration needs more than " +
                              std::to_string(cap) + " subsets");
  }
  f.evaluate(A);  // validates ids before workers start

  Candidate best;
  if (count < kParallelThreshold || worker_count() <= 1) {
    best = scan_range(f, A, k, 0, count);
  } else {
    std::vector<Candidate> chunk_best(
        static_cast<std::size_t>(worker_count()));
    parallel_chunks(static_cast<std::size_t>(count),
                    [&](std::size_t begin, std::size_t end, std::size_t chunk) {
                      chunk_best[chunk] = scan_range(f, A, k, begin, end);
                    });
    for (const Candidate& c : chunk_best) {
      if (c.better_than(best)) best = c;
    }
  }

  RemovalResult result;
  result.removed = std::move(best.removed);
  result.remaining = A.set_minus(result.removed);
  result.value = f.evaluate(result.remaining);
  result.exact = true;
  return result;
}

RemovalResult worst_case_removal_greedy(const Objective& f,
                                        const ElementSet& A, int alpha) {
  if (alpha < 0) throw InvalidArgumentError("alpha must be nonnegative");
  int k = std::min<int>(alpha, static_cast<int>(A.size()));

  ElementSet current = A;
  ElementSet removed;
  for (int step = 0; step < k; ++step) {
    ElementId best_id = -1;
    Value best_value = 0.0;
    for (ElementId b : current) {  // ascending scan, strict <: smallest id wins ties
      Value v = f.evaluate(current.without(b));
      if (best_id == -1 || v < best_value) {
        best_id = b;
        best_value = v;
      }
    }
    current = current.without(best_id);
    removed = removed.with(best_id);
  }

  RemovalResult result;
  result.removed = std::move(removed);
  result.remaining = std::move(current);
  result.value = f.evaluate(result.remaining);
  result.exact = false;
  return result;
}

Value resilient_value(const Objective& f, const ElementSet& A, int alpha) {
  return worst_case_removal_exact(f, A, alpha).value;
}

}  // namespace resilmax
