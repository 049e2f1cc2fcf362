#pragma once

#include <cstdint>

#include "resilmax/element_set.hpp"
#include "resilmax/objective.hpp"

namespace resilmax {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Outcome of removing up to alpha elements from a chosen set A.
struct RemovalResult {
  ElementSet removed;    // the removal B, always of size min(alpha, |A|)
  ElementSet remaining;  // A ∖ B
  Value value = 0.0;     // f(remaining)
  bool exact = false;    // enumeration (true) vs greedy heuristic (false)
};

/// Optimal removal by enumeration of every subset of A of size exactly
/// min(alpha, |A|): monotonicity makes smaller removals never better for
/// the adversary, and the full-size normalization is what the proof-chain
/// verifier needs. Ties go to the lexicographically smallest removed set,
/// independent of the worker count. Throws BudgetExceededError when
/// C(|A|, min(alpha, |A|)) exceeds cap.
RemovalResult worst_case_removal_exact(
    const Objective& f, const ElementSet& A, int alpha,
    std::uint64_t cap = kDefaultEnumerationCap);

/// Scalable stand-in: repeatedly deletes the element whose removal hurts
/// most (ties to the smallest id). Its value is an upper bound on the true
/// worst-case value.
RemovalResult worst_case_removal_greedy(const Objective& f,
                                        const ElementSet& A, int alpha);

/// f(A ∖ B★(A)): the value the adversary leaves behind.
Value resilient_value(const Objective& f, const ElementSet& A, int alpha);

}  // namespace resilmax
