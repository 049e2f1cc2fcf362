#include "resilmax/generator.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "resilmax/errors.hpp"

namespace resilmax {

namespace {

std::vector<double> draw_weights(Rng& rng, int count) {
  std::vector<double> w(static_cast<std::size_t>(count));
  for (double& x : w) x = rng.uniform_weight();
  return w;
}

/// First k entries of a Fisher-Yates shuffle of {0..m-1}: a uniform
/// k-subset, order discarded by the caller's canonicalization.
std::vector<int> sample_without_replacement(Rng& rng, int m, int k) {
  std::vector<int> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(rng.uniform_int(i, m - 1))]);
  }
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

Objective::Family draw_family(InstanceFamily family, Rng& rng, int n, int m) {
  switch (family) {
    case InstanceFamily::WeightedCoverage: {
      WeightedCoverage wc;
      wc.item_weights = draw_weights(rng, m);
      wc.covers.reserve(static_cast<std::size_t>(n));
      for (int e = 0; e < n; ++e) {
        const int size = rng.uniform_int(1, std::max(1, m / 2));
        std::vector<int> cover = sample_without_replacement(rng, m, size);
        std::sort(cover.begin(), cover.end());
        wc.covers.push_back(std::move(cover));
      }
      return wc;
    }
    case InstanceFamily::FacilityLocation: {
      FacilityLocation fl;
      fl.value_matrix.reserve(static_cast<std::size_t>(n));
      for (int e = 0; e < n; ++e) fl.value_matrix.push_back(draw_weights(rng, m));
      return fl;
    }
    case InstanceFamily::Modular:
      return Modular{draw_weights(rng, n)};
  }
  throw InvalidArgumentError("unknown instance family");
}

/// Random partition of {0..n-1} into `nblocks` nonempty blocks with
/// capacities summing to at most rank_max (and at least 1).
PartitionMatroid draw_partition(Rng& rng, int n, int nblocks, int rank_max) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(ids[static_cast<std::size_t>(i)],
              ids[static_cast<std::size_t>(rng.uniform_int(0, i))]);
  }

  // nblocks - 1 distinct interior cut points split the shuffled ids.
  std::vector<int> cuts = sample_without_replacement(rng, n - 1, nblocks - 1);
  for (int& c : cuts) ++c;  // interior positions 1..n-1
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());

  PartitionMatroid pm;
  for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
    std::vector<ElementId> block(ids.begin() + cuts[b], ids.begin() + cuts[b + 1]);
    pm.blocks.push_back(ElementSet::from_unsorted(std::move(block)));
    pm.capacities.push_back(
        rng.uniform_int(1, static_cast<int>(pm.blocks.back().size())));
  }

  // Trim the largest capacity (ties to the earliest block) until the total
  // rank fits the cap; rank_max >= 1 keeps the matroid nontrivial.
  int total = std::accumulate(pm.capacities.begin(), pm.capacities.end(), 0);
  while (total > rank_max) {
    std::size_t largest = 0;
    for (std::size_t b = 1; b < pm.capacities.size(); ++b) {
      if (pm.capacities[b] > pm.capacities[largest]) largest = b;
    }
    --pm.capacities[largest];
    --total;
  }
  return pm;
}

}  // namespace

const char* family_name(InstanceFamily f) {
  switch (f) {
    case InstanceFamily::WeightedCoverage: return "coverage";
    case InstanceFamily::FacilityLocation: return "facility";
    case InstanceFamily::Modular: return "modular";
  }
  return "?";
}

InstanceFamily family_from_name(const std::string& name) {
  if (name == "coverage") return InstanceFamily::WeightedCoverage;
  if (name == "facility") return InstanceFamily::FacilityLocation;
  if (name == "modular") return InstanceFamily::Modular;
  throw InvalidArgumentError(
      "unknown family \"" + name + "\" (expected coverage|facility|modular)");
}

Instance gen_instance(InstanceFamily family, int n, std::uint64_t seed,
                      const GenParams& params) {
  if (n < 1) throw InvalidArgumentError("gen requires n >= 1");
  const int m = params.m > 0 ? params.m : 2 * n;
  const int rank = params.rank > 0 ? params.rank : std::max(1, n / 3);
  if (rank > n) throw InvalidArgumentError("rank exceeds ground size");
  if (params.alpha < 0) throw InvalidArgumentError("alpha must be >= 0");

  Rng rng(seed);
  Objective objective(draw_family(family, rng, n, m), /*enable_cache=*/true);
  Matroid matroid(UniformMatroid{rank}, n);
  return Instance(GroundSet{n, {}}, std::move(objective), std::move(matroid),
                  params.alpha);
}

Instance random_instance(InstanceFamily family, Rng& rng,
                         const RandomLimits& limits) {
  if (limits.n_min < 2 || limits.n_max < limits.n_min ||
      limits.rank_max < 1 || limits.alpha_max < 1) {
    throw InvalidArgumentError("random_instance limits out of range");
  }
  const int n = rng.uniform_int(limits.n_min, limits.n_max);
  const int m = rng.uniform_int(n, 2 * n);
  Objective objective(draw_family(family, rng, n, m), /*enable_cache=*/true);

  Matroid::Kind kind;
  if (rng.uniform_int(0, 1) == 0) {
    kind = UniformMatroid{rng.uniform_int(1, std::min(limits.rank_max, n))};
  } else {
    const int nblocks = rng.uniform_int(1, std::min(3, n));
    kind = draw_partition(rng, n, nblocks, limits.rank_max);
  }
  Matroid matroid(std::move(kind), n);

  const int alpha = rng.uniform_int(1, limits.alpha_max);
  return Instance(GroundSet{n, {}}, std::move(objective), std::move(matroid),
                  alpha);
}

}  // namespace resilmax
