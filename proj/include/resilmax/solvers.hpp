#pragma once

#include <cstdint>
#include <vector>

#include "resilmax/adversary.hpp"
#include "resilmax/instance.hpp"

namespace resilmax {

enum class Algorithm { Myopic, GreedyMarginal, ExactResilient };

const char* algorithm_name(Algorithm a);

struct Solution {
  ElementSet chosen;
  std::vector<ElementId> selection_order;
  Algorithm algorithm = Algorithm::Myopic;
  RemovalResult removal;        // exact worst-case removal at the instance's alpha
  Value resilient_value = 0.0;  // removal.value
  bool truncated = false;       // rank not reached (impossible for validated instances)
};

/// Selects by singleton value f({a}) — never by marginal gain — over the
/// feasible candidates until the solution is a base. Ties go to the
/// smallest id. Deterministic regardless of the worker count.
Solution solve_myopic(const Instance& inst);

/// Classical baseline: same loop, but selects by marginal gain
/// f(A ∪ {a}) − f(A) at the current partial solution.
Solution solve_greedy_marginal(const Instance& inst);

/// Ground truth: enumerates every base of the matroid, scores each by its
/// exact worst-case removal, and returns a maximizer (ties to the
/// lexicographically smallest base). Throws BudgetExceededError when the
/// number of bases exceeds cap.
Solution solve_exact_resilient(const Instance& inst,
                               std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace resilmax
