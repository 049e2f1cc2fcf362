#include "resilmax/solvers.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "resilmax/combinations.hpp"
#include "resilmax/errors.hpp"

namespace resilmax {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Myopic:
      return "myopic";
    case Algorithm::GreedyMarginal:
      return "greedy";
    case Algorithm::ExactResilient:
      return "exact";
  }
  return "unknown";
}

namespace {

Solution finish(const Instance& inst, Solution sol) {
  sol.removal =
      worst_case_removal_exact(inst.objective, sol.chosen, inst.alpha);
  sol.resilient_value = sol.removal.value;
  return sol;
}

// Shared selection loop; score(a, partial) defines the rule.
template <class Score>
Solution select_loop(const Instance& inst, Algorithm tag, Score score) {
  Solution sol;
  sol.algorithm = tag;
  int rank = inst.matroid.rank();
  while (static_cast<int>(sol.chosen.size()) < rank) {
    ElementId best = -1;
    Value best_value = 0.0;
    for (ElementId a = 0; a < inst.ground.n; ++a) {  // ascending: ties to smallest id
      if (sol.chosen.contains(a)) continue;
      if (!inst.matroid.is_independent(sol.chosen.with(a))) continue;
      Value v = score(a, sol.chosen);
      if (best == -1 || v > best_value) {
        best = a;
        best_value = v;
      }
    }
    if (best == -1) {
      sol.truncated = true;  // unreachable for validated matroids
      break;
    }
    sol.chosen = sol.chosen.with(best);
    sol.selection_order.push_back(best);
  }
  return finish(inst, std::move(sol));
}

// Bases of a partition matroid: cross product of per-block capacity-subsets.
void enumerate_partition_bases(
    const Matroid& M, const std::function<void(const ElementSet&)>& visit) {
  const auto& p = std::get<PartitionMatroid>(M.kind());
  std::size_t nblocks = p.blocks.size();

  // Per-block combination state, advanced like an odometer.
  std::vector<std::vector<int>> positions(nblocks);
  for (std::size_t b = 0; b < nblocks; ++b) {
    positions[b].resize(static_cast<std::size_t>(p.capacities[b]));
    for (int i = 0; i < p.capacities[b]; ++i) {
      positions[b][static_cast<std::size_t>(i)] = i;
    }
  }

  for (;;) {
    std::vector<ElementId> ids;
    for (std::size_t b = 0; b < nblocks; ++b) {
      for (int pos : positions[b]) {
        ids.push_back(p.blocks[b].ids()[static_cast<std::size_t>(pos)]);
      }
    }
    visit(ElementSet::from_unsorted(std::move(ids)));

    std::size_t b = 0;
    for (; b < nblocks; ++b) {
      if (combination_next(positions[b],
                           static_cast<int>(p.blocks[b].size()))) {
        break;
      }
      for (int i = 0; i < p.capacities[b]; ++i) {
        positions[b][static_cast<std::size_t>(i)] = i;
      }
    }
    if (b == nblocks) return;
  }
}

std::uint64_t base_count(const Matroid& M, std::uint64_t cap) {
  if (const auto* u = std::get_if<UniformMatroid>(&M.kind())) {
    return binomial_capped(static_cast<std::uint64_t>(M.ground_size()),
                           static_cast<std::uint64_t>(u->rank), cap);
  }
  const auto& p = std::get<PartitionMatroid>(M.kind());
  std::uint64_t total = 1;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    std::uint64_t c = binomial_capped(
        p.blocks[b].size(), static_cast<std::uint64_t>(p.capacities[b]), cap);
    if (c == 0) return 0;
    if (total > cap / c) return cap + 1;
    total *= c;
  }
  return total;
}

}  // namespace

Solution solve_myopic(const Instance& inst) {
  // Singleton values are fixed, so compute them once up front.
  std::vector<Value> singleton(static_cast<std::size_t>(inst.ground.n));
  for (ElementId a = 0; a < inst.ground.n; ++a) {
    singleton[static_cast<std::size_t>(a)] = inst.objective.singleton(a);
  }
  return select_loop(inst, Algorithm::Myopic,
                     [&singleton](ElementId a, const ElementSet&) {
                       return singleton[static_cast<std::size_t>(a)];
                     });
}

Solution solve_greedy_marginal(const Instance& inst) {
  return select_loop(inst, Algorithm::GreedyMarginal,
                     [&inst](ElementId a, const ElementSet& partial) {
                       return inst.objective.marginal(a, partial);
                     });
}

Solution solve_exact_resilient(const Instance& inst, std::uint64_t cap) {
  std::uint64_t count = base_count(inst.matroid, cap);
  if (count > cap) {
    throw BudgetExceededError("base enumeration needs more than " +
                              std::to_string(cap) + " adversary calls");
  }

  ElementSet best;
  Value best_value = 0.0;
  bool have_best = false;
  auto consider = [&](const ElementSet& base) {
    Value v = worst_case_removal_exact(inst.objective, base, inst.alpha, cap)
                  .value;
    // Value first, lexicographically smallest base second.
    if (!have_best || v > best_value || (v == best_value && base < best)) {
      best = base;
      best_value = v;
      have_best = true;
    }
  };

  if (const auto* u = std::get_if<UniformMatroid>(&inst.matroid.kind())) {
    std::vector<int> positions(static_cast<std::size_t>(u->rank));
    for (int i = 0; i < u->rank; ++i) positions[static_cast<std::size_t>(i)] = i;
    for (std::uint64_t r = 0; r < count; ++r) {
      std::vector<ElementId> ids(positions.begin(), positions.end());
      consider(ElementSet::from_unsorted(std::move(ids)));
      if (r + 1 < count) combination_next(positions, inst.ground.n);
    }
  } else {
    enumerate_partition_bases(inst.matroid, consider);
  }

  Solution sol;
  sol.algorithm = Algorithm::ExactResilient;
  sol.chosen = best;
  sol.selection_order.assign(best.begin(), best.end());
  return finish(inst, std::move(sol));
}

}  // namespace resilmax
