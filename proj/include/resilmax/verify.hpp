#pragma once

#include <algorithm>

#include "resilmax/instance.hpp"
#include "resilmax/matroid.hpp"
#include "resilmax/solvers.hpp"

namespace resilmax {

/// Machine check of every inequality linking the myopic solution's
/// resilient value to the optimum. All comparisons use the relative
/// tolerance 1e-9 scaled by max(1, rhs).
struct ProofChainReport {
  double nu = 0.0;

  // Remaining value bounded by the discounted sum of its singletons.
  Value eq4_lhs = 0.0;  // f(R(A_sol))
  Value eq4_rhs = 0.0;  // (1 - nu) * sum of f({a}) over R(A_sol)
  bool eq4_holds = false;

  // Greedy choice through the exchange bijection.
  ExchangeBijection pi;  // A_sol -> A_opt
  bool eq5_holds = false;  // f({a}) >= f({pi(a)}) for every a in A_sol

  // Substituting the bijection images into the singleton sum.
  Value eq6_rhs = 0.0;  // (1 - nu) * sum of f({pi(a)}) over R(A_sol)
  bool eq6_holds = false;

  // Collapsing the image sum to a set value by submodularity.
  ElementSet mapped_remainder;  // R_astar = { pi(a) : a in R(A_sol) }
  Value eq7_rhs = 0.0;          // (1 - nu) * f(R_astar)
  bool eq7_holds = false;

  // R_astar is itself a feasible removal outcome of the optimal base, so it
  // cannot beat the adversary's optimum there.
  Value final_lhs = 0.0;  // f(R_astar)
  Value final_rhs = 0.0;  // f(R(A_opt))
  bool final_link_holds = false;

  // alpha exceeded |A_sol|: removals were truncated to the whole set and
  // every link degenerates to 0 >= 0.
  bool removal_truncated = false;

  bool all_hold = false;
};

struct Certificate {
  Curvature nu;
  Value value_sol = 0.0;  // f(R(A_sol)), exact adversary
  Value value_opt = 0.0;  // f(R(A_opt)), exact adversary
  Value bound = 0.0;      // (1 - nu) * value_opt
  double ratio = 1.0;     // value_sol / value_opt, defined 1 when value_opt = 0
  bool theorem_holds = false;
  ProofChainReport proof_chain;
};

/// lhs >= rhs up to the verifier tolerance.
inline bool holds_geq(Value lhs, Value rhs) {
  return lhs >= rhs - 1e-9 * std::max(1.0, rhs < 0 ? -rhs : rhs);
}

/// Verifies the approximation guarantee f(R(A_sol)) >= (1 - nu) f(R(A_opt))
/// plus the full proof chain. `sol` must come from solve_myopic and `opt`
/// from solve_exact_resilient on the same instance.
Certificate certify(const Instance& inst, const Solution& sol,
                    const Solution& opt);

/// The per-inequality breakdown behind certify. Refuses non-myopic
/// solutions: the greedy-choice link has no guarantee for other rules.
ProofChainReport check_proof_chain(const Instance& inst, const Solution& sol,
                                   const Solution& opt);

struct BoundConstants {
  double myopic_bound;           // 1 - nu
  double greedy_resilient_bound; // (1 - nu) / (1 + nu)
};

/// The two approximation constants as functions of curvature. The myopic
/// bound dominates the greedy-resilient one on all of [0, 1].
BoundConstants bound_constants(double nu);

}  // namespace resilmax
