#include "doctest.h"

#include <cstdlib>
#include <map>
#include <vector>

#include "fixtures.hpp"
#include "resilmax/errors.hpp"
#include "resilmax/generator.hpp"
#include "resilmax/rng.hpp"
#include "resilmax/solvers.hpp"

using namespace resilmax;

namespace {

Instance partition_modular_2131() {
  // Weights (2,1,3,1); blocks {0,1} and {2,3}, one slot each.
  PartitionMatroid pm;
  pm.blocks = {ElementSet{0, 1}, ElementSet{2, 3}};
  pm.capacities = {1, 1};
  return Instance(GroundSet{4, {}},
                  Objective{Objective::Family{Modular{{2.0, 1.0, 3.0, 1.0}}}},
                  Matroid(Matroid::Kind{pm}, 4), 1);
}

bool same_solution(const Solution& a, const Solution& b) {
  return a.chosen == b.chosen && a.selection_order == b.selection_order &&
         a.removal.removed == b.removal.removed &&
         a.resilient_value == b.resilient_value && a.algorithm == b.algorithm;
}

}  // namespace

TEST_CASE("myopic on the coverage example") {
  Solution sol = solve_myopic(fixtures::w1_instance());
  CHECK(sol.chosen == ElementSet{0, 1});
  CHECK(sol.selection_order == std::vector<int>{0, 1});
  CHECK(sol.resilient_value == 2.0);
  CHECK(sol.removal.exact);
  CHECK_FALSE(sol.truncated);
}

TEST_CASE("myopic on the modular example") {
  Solution sol = solve_myopic(fixtures::modular321_instance());
  CHECK(sol.chosen == ElementSet{0, 1});
  CHECK(sol.selection_order == std::vector<int>{0, 1});
}

TEST_CASE("myopic on a partition instance picks globally best first") {
  Solution sol = solve_myopic(partition_modular_2131());
  CHECK(sol.selection_order == std::vector<int>{2, 0});
  CHECK(sol.chosen == ElementSet{0, 2});
}

TEST_CASE("greedy marginal baseline") {
  CHECK(solve_greedy_marginal(fixtures::w1_instance()).chosen ==
        ElementSet{0, 1});
  CHECK(solve_greedy_marginal(fixtures::w3_instance()).chosen ==
        ElementSet{0, 1});

  // Marginals equal singletons on modular objectives, so the two solvers
  // coincide there.
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    Instance inst =
        random_instance(InstanceFamily::Modular, rng, RandomLimits{3, 9, 4, 2});
    CHECK(same_solution(
              Solution{solve_myopic(inst)},
              [&] {
                Solution g = solve_greedy_marginal(inst);
                g.algorithm = Algorithm::Myopic;  // compare everything else
                return g;
              }()));
  }
}

TEST_CASE("exact solver on the golden instances") {
  Solution w1 = solve_exact_resilient(fixtures::w1_instance());
  CHECK(w1.chosen == ElementSet{0, 1});
  CHECK(w1.resilient_value == 2.0);

  Solution mod = solve_exact_resilient(fixtures::modular321_instance());
  CHECK(mod.chosen == ElementSet{0, 1});
  CHECK(mod.resilient_value == 2.0);
}

TEST_CASE("rank zero yields the empty solution") {
  Instance inst(GroundSet{3, {}}, fixtures::modular321_objective(),
                Matroid(Matroid::Kind{UniformMatroid{0}}, 3), 1);
  for (const Solution& sol :
       {solve_myopic(inst), solve_greedy_marginal(inst),
        solve_exact_resilient(inst)}) {
    CHECK(sol.chosen.empty());
    CHECK(sol.selection_order.empty());
    CHECK(sol.resilient_value == 0.0);
    CHECK_FALSE(sol.truncated);
  }
}

TEST_CASE("all solvers return bases") {
  Rng rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    InstanceFamily family = static_cast<InstanceFamily>(trial % 3);
    Instance inst = random_instance(family, rng, RandomLimits{3, 9, 4, 2});
    for (const Solution& sol :
         {solve_myopic(inst), solve_greedy_marginal(inst),
          solve_exact_resilient(inst)}) {
      CHECK(inst.matroid.is_base(sol.chosen));
      CHECK_FALSE(sol.truncated);
      CHECK(sol.chosen.size() == sol.selection_order.size());
    }
  }
}

TEST_CASE("myopic selection values never increase within a block") {
  Rng rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    InstanceFamily family = static_cast<InstanceFamily>(trial % 3);
    Instance inst = random_instance(family, rng, RandomLimits{3, 10, 5, 2});
    Solution sol = solve_myopic(inst);
    std::map<int, Value> last_in_block;
    for (ElementId a : sol.selection_order) {
      int block = inst.matroid.block_of(a);  // -1 lumps uniform together
      Value v = inst.objective.singleton(a);
      auto it = last_in_block.find(block);
      if (it != last_in_block.end()) CHECK(it->second >= v);
      last_in_block[block] = v;
    }
  }
}

TEST_CASE("myopic beats later candidates through the exchange bijection") {
  // Eq. 5's precondition: each selected element's singleton value dominates
  // its image in any other base.
  Rng rng(109);
  for (int trial = 0; trial < 25; ++trial) {
    InstanceFamily family = static_cast<InstanceFamily>(trial % 3);
    Instance inst = random_instance(family, rng, RandomLimits{3, 9, 4, 2});
    Solution sol = solve_myopic(inst);
    Solution opt = solve_exact_resilient(inst);
    ExchangeBijection pi =
        exchange_bijection(inst.matroid, sol.chosen, opt.chosen);
    for (const auto& [a, b] : pi.pairs) {
      CHECK(inst.objective.singleton(a) >=
            inst.objective.singleton(b) - 1e-12);
    }
  }
}

TEST_CASE("exact solver matches the bitmask oracle") {
  Rng rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    InstanceFamily family = static_cast<InstanceFamily>(trial % 3);
    Instance inst = random_instance(family, rng, RandomLimits{3, 8, 4, 2});
    Solution opt = solve_exact_resilient(inst);
    CHECK(opt.resilient_value == fixtures::oracle_best_base_value(inst));
  }
}

TEST_CASE("myopic equals exact on modular uniform instances") {
  Rng rng(127);
  for (int trial = 0; trial < 100; ++trial) {
    int n = rng.uniform_int(3, 9);
    GenParams params;
    params.rank = rng.uniform_int(1, std::min(4, n));
    params.alpha = rng.uniform_int(1, 2);
    Instance inst = gen_instance(InstanceFamily::Modular, n,
                                 mix_seed(991, static_cast<std::uint64_t>(trial)),
                                 params);
    Solution myopic = solve_myopic(inst);
    Solution exact = solve_exact_resilient(inst);
    CHECK(myopic.resilient_value == exact.resilient_value);  // bitwise
  }
}

TEST_CASE("solver output is deterministic across thread counts") {
  Rng rng(131);
  Instance inst = random_instance(InstanceFamily::WeightedCoverage, rng,
                                  RandomLimits{8, 10, 5, 2});
  setenv("RESILMAX_THREADS", "1", 1);
  Solution m1 = solve_myopic(inst);
  Solution e1 = solve_exact_resilient(inst);
  setenv("RESILMAX_THREADS", "4", 1);
  Solution m4 = solve_myopic(inst);
  Solution e4 = solve_exact_resilient(inst);
  unsetenv("RESILMAX_THREADS");
  CHECK(same_solution(m1, m4));
  CHECK(same_solution(e1, e4));
  CHECK(same_solution(m1, solve_myopic(inst)));
}

TEST_CASE("exact solver budget") {
  Instance inst(GroundSet{30, {}},
                Objective{Objective::Family{Modular{std::vector<double>(30, 1.0)}}},
                Matroid(Matroid::Kind{UniformMatroid{15}}, 30), 1);
  CHECK_THROWS_AS(solve_exact_resilient(inst), BudgetExceededError);
  CHECK_THROWS_AS(solve_exact_resilient(fixtures::w1_instance(), 2),
                  BudgetExceededError);  // three bases > cap of two
}

TEST_CASE("algorithm names") {
  CHECK(std::string(algorithm_name(Algorithm::Myopic)) == "myopic");
  CHECK(std::string(algorithm_name(Algorithm::GreedyMarginal)) == "greedy");
  CHECK(std::string(algorithm_name(Algorithm::ExactResilient)) == "exact");
}
