#pragma once

// Shared fixtures: the two coverage ground-truth instances, a modular one,
// and independent bitmask-based brute-force oracles the module tests and the
// acceptance suite compare against. The oracles deliberately reimplement the
// enumerations with plain mask loops rather than reusing library code.

#include <cstdint>
#include <utility>
#include <vector>

#include "resilmax/adversary.hpp"
#include "resilmax/instance.hpp"
#include "resilmax/matroid.hpp"
#include "resilmax/objective.hpp"

namespace fixtures {

using resilmax::ElementId;
using resilmax::ElementSet;
using resilmax::GroundSet;
using resilmax::Instance;
using resilmax::Matroid;
using resilmax::Objective;
using resilmax::UniformMatroid;
using resilmax::Value;

// Three unit items; e0 covers {0,1}, e1 covers {1,2}, e2 covers {2}.
// Singletons 2, 2, 1; element 1 is fully redundant at full ground set.
inline Objective w1_objective() {
  resilmax::WeightedCoverage c;
  c.item_weights = {1.0, 1.0, 1.0};
  c.covers = {{0, 1}, {1, 2}, {2}};
  return Objective(std::move(c));
}

inline Instance w1_instance(int alpha = 1) {
  return Instance(GroundSet{3, {}}, w1_objective(),
                  Matroid(UniformMatroid{2}, 3), alpha);
}

// Two elements sharing one of three unit items; both curvature ratios 1/2.
inline Objective w3_objective() {
  resilmax::WeightedCoverage c;
  c.item_weights = {1.0, 1.0, 1.0};
  c.covers = {{0, 2}, {1, 2}};
  return Objective(std::move(c));
}

inline Instance w3_instance(int alpha = 1) {
  return Instance(GroundSet{2, {}}, w3_objective(),
                  Matroid(UniformMatroid{2}, 2), alpha);
}

inline Objective modular321_objective() {
  return Objective(resilmax::Modular{{3.0, 2.0, 1.0}});
}

inline Instance modular321_instance(int alpha = 1) {
  return Instance(GroundSet{3, {}}, modular321_objective(),
                  Matroid(UniformMatroid{2}, 3), alpha);
}

inline int popcount64(std::uint64_t m) {
  int c = 0;
  for (; m; m &= m - 1) ++c;
  return c;
}

// min f(A ∖ B) over ALL B ⊆ A with |B| ≤ alpha, by masking over A's ids.
inline Value oracle_min_removal(const Objective& f, const ElementSet& A,
                                int alpha) {
  const std::vector<ElementId>& ids = A.ids();
  const int m = static_cast<int>(ids.size());
  Value best = f.evaluate(A);
  for (std::uint64_t bm = 0; bm < (std::uint64_t{1} << m); ++bm) {
    if (popcount64(bm) > alpha) continue;
    std::vector<ElementId> rest;
    for (int i = 0; i < m; ++i) {
      if (!(bm & (std::uint64_t{1} << i))) {
        rest.push_back(ids[static_cast<std::size_t>(i)]);
      }
    }
    Value v = f.evaluate(ElementSet::from_unsorted(std::move(rest)));
    if (v < best) best = v;
  }
  return best;
}

// max over all bases of the oracle worst-case value, by masking over the
// whole ground set.
inline Value oracle_best_base_value(const Instance& inst) {
  const int n = inst.ground.n;
  const int rank = inst.matroid.rank();
  Value best = 0.0;
  bool have = false;
  for (std::uint64_t bm = 0; bm < (std::uint64_t{1} << n); ++bm) {
    if (popcount64(bm) != rank) continue;
    ElementSet base = resilmax::set_from_mask(bm);
    if (!inst.matroid.is_independent(base)) continue;
    Value v = oracle_min_removal(inst.objective, base, inst.alpha);
    if (!have || v > best) {
      best = v;
      have = true;
    }
  }
  return best;
}

}  // namespace fixtures
