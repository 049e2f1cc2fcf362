#pragma once

#include <cstdint>
#include <string>

#include "resilmax/instance.hpp"
#include "resilmax/rng.hpp"

namespace resilmax {

enum class InstanceFamily { WeightedCoverage, FacilityLocation, Modular };

const char* family_name(InstanceFamily f);  // "coverage" | "facility" | "modular"
InstanceFamily family_from_name(const std::string& name);

/// Knobs for cmd_gen. Zero means "derive a default from n".
struct GenParams {
  int m = 0;     // items / clients; default 2n
  int rank = 0;  // uniform matroid rank; default max(1, n/3)
  int alpha = 1;
};

/// Deterministic instance from (family, n, seed, params): same inputs give
/// byte-identical files. Weights are drawn on the dyadic grid k/2^20 with
/// k in [1, 2^20], so every desk-scale sum and difference of weights is
/// exact in binary64; modular instances then have curvature exactly 0 and
/// the solvers agree exactly where they should.
Instance gen_instance(InstanceFamily family, int n, std::uint64_t seed,
                      const GenParams& params = {});

/// Size caps for randomly drawn benchmark instances.
struct RandomLimits {
  int n_min = 3;
  int n_max = 10;
  int rank_max = 5;
  int alpha_max = 2;
};

/// Random instance drawn from rng: random size, weights on the dyadic
/// grid, uniform or partition matroid (fair coin), random alpha in
/// [1, alpha_max]. Consumes rng; equal states give equal instances.
Instance random_instance(InstanceFamily family, Rng& rng,
                         const RandomLimits& limits = {});

}  // namespace resilmax
