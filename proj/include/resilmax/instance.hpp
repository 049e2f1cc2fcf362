#pragma once

#include "resilmax/element_set.hpp"
#include "resilmax/matroid.hpp"
#include "resilmax/objective.hpp"

namespace resilmax {

/// A resilient-maximization problem: objective and matroid over one ground
/// set, plus the adversary's removal budget.
struct Instance {
  GroundSet ground;
  Objective objective;
  Matroid matroid;
  int alpha = 0;

  Instance(GroundSet ground_, Objective objective_, Matroid matroid_,
           int alpha_);
};

}  // namespace resilmax
