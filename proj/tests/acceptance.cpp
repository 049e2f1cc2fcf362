// Acceptance gate: one numbered check per shipped guarantee, each printing
// PASS or FAIL with a short diagnostic. Exit code is the failure count.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "resilmax/bench.hpp"
#include "resilmax/generator.hpp"
#include "resilmax/instance_io.hpp"
#include "resilmax/matroid.hpp"
#include "resilmax/rng.hpp"
#include "resilmax/solvers.hpp"
#include "resilmax/verify.hpp"

using namespace resilmax;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << (pass ? " PASS: " : " FAIL: ")
            << detail << '\n';
  if (!pass) ++failures;
}

Instance nth_instance(std::uint64_t seed, int trial, const RandomLimits& limits) {
  const InstanceFamily family = static_cast<InstanceFamily>(trial % 3);
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
  return random_instance(family, rng, limits);
}

// Criteria 1 and 2: the Theorem over 300 instances with the stated
// tolerance, and every proof-chain link individually.
void theorem_and_chain_suite() {
  const auto start = std::chrono::steady_clock::now();
  const RandomLimits limits{3, 9, 4, 2};
  int theorem_violations = 0;
  int chain_violations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = nth_instance(42, trial, limits);
    Solution sol = solve_myopic(inst);
    Solution opt = solve_exact_resilient(inst);
    double nu = curvature(inst.objective, inst.ground).nu;
    Value value_sol = sol.resilient_value;
    Value value_opt = opt.resilient_value;
    if (value_sol <
        (1.0 - nu) * value_opt - 1e-9 * std::max(1.0, value_opt)) {
      ++theorem_violations;
    }
    if (!check_proof_chain(inst, sol, opt).all_hold) ++chain_violations;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "300 instances, %d bound violations, %.1f s (budget 60)",
                theorem_violations, seconds);
  report(1, theorem_violations == 0 && seconds < 60.0, buf);
  std::snprintf(buf, sizeof buf, "300 instances, %d proof-chain failures",
                chain_violations);
  report(2, chain_violations == 0, buf);
}

// Criterion 3: the singleton-sum bound over every subset of 50 instances.
void eq4_exhaustive_suite() {
  int violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Instance inst = nth_instance(43, trial, RandomLimits{3, 8, 4, 2});
    const Objective& f = inst.objective;
    const int n = inst.ground.n;
    const double nu = curvature(f, inst.ground).nu;
    std::vector<Value> singles(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      singles[static_cast<std::size_t>(x)] = f.singleton(x);
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Value sum = 0.0;
      for (int x = 0; x < n; ++x) {
        if (m & (std::uint64_t{1} << x)) {
          sum += singles[static_cast<std::size_t>(x)];
        }
      }
      const Value rhs = (1.0 - nu) * sum;
      if (f.evaluate(set_from_mask(m)) < rhs - 1e-9 * std::max(1.0, rhs)) {
        ++violations;
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "50 instances, all subsets, %d violations", violations);
  report(3, violations == 0, buf);
}

// Criterion 4: modular instances are solved exactly, bitwise.
void modular_exactness_suite() {
  int failures_here = 0;
  Rng meta(991);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = meta.uniform_int(3, 9);
    GenParams params;
    params.rank = meta.uniform_int(1, std::min(4, n));
    params.alpha = meta.uniform_int(1, 2);
    Instance inst =
        gen_instance(InstanceFamily::Modular, n,
                     mix_seed(44, static_cast<std::uint64_t>(trial)), params);
    if (curvature(inst.objective, inst.ground).nu != 0.0) ++failures_here;
    Solution myopic = solve_myopic(inst);
    Solution exact = solve_exact_resilient(inst);
    if (myopic.resilient_value != exact.resilient_value) ++failures_here;
    Certificate cert = certify(inst, myopic, exact);
    if (cert.ratio != 1.0) ++failures_here;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "100 modular instances, %d exactness failures", failures_here);
  report(4, failures_here == 0, buf);
}

// Criterion 5: curvature anchors on the golden instances.
void curvature_sanity_suite() {
  const std::string dir = TEST_DATA_DIR;
  bool ok = true;
  std::string detail;
  try {
    const double nu_mod =
        curvature(fixtures::modular321_objective(), GroundSet{3, {}}).nu;
    Instance w1 = load_instance(dir + "/w1.json");
    const double nu_w1 = curvature(w1.objective, w1.ground).nu;
    Instance w3 = load_instance(dir + "/w3.json");
    const double nu_w3 = curvature(w3.objective, w3.ground).nu;
    ok = nu_mod == 0.0 && nu_w1 == 1.0 && std::abs(nu_w3 - 0.5) <= 1e-12;
    char buf[128];
    std::snprintf(buf, sizeof buf, "modular nu=%g, W1 nu=%g, W3 nu=%g",
                  nu_mod, nu_w1, nu_w3);
    detail = buf;
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(5, ok, detail);
}

ElementSet random_uniform_base(Rng& rng, int n, int r) {
  std::vector<ElementId> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::vector<ElementId> ids;
  for (int i = 0; i < r; ++i) {
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(rng.uniform_int(i, n - 1))]);
    ids.push_back(pool[static_cast<std::size_t>(i)]);
  }
  return ElementSet::from_unsorted(std::move(ids));
}

// Criterion 6: bijections verify on random base pairs of both classes.
void bijection_suite() {
  Rng rng(45);
  int bad = 0;

  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform_int(4, 10);
    const int r = rng.uniform_int(1, std::min(5, n));
    Matroid M(Matroid::Kind{UniformMatroid{r}}, n);
    ElementSet A = random_uniform_base(rng, n, r);
    ElementSet B = random_uniform_base(rng, n, r);
    if (!verify_exchange(M, A, exchange_bijection(M, A, B))) ++bad;
  }

  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform_int(4, 10);
    // Random partition: shuffle ids, split into up to three blocks.
    std::vector<ElementId> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(ids[static_cast<std::size_t>(i)],
                ids[static_cast<std::size_t>(rng.uniform_int(0, i))]);
    }
    const int nblocks = rng.uniform_int(1, std::min(3, n));
    PartitionMatroid pm;
    int at = 0;
    for (int b = 0; b < nblocks; ++b) {
      const int remaining_blocks = nblocks - b - 1;
      const int max_take = n - at - remaining_blocks;
      const int take = b + 1 == nblocks ? max_take
                                        : rng.uniform_int(1, max_take);
      pm.blocks.push_back(ElementSet::from_unsorted(std::vector<ElementId>(
          ids.begin() + at, ids.begin() + at + take)));
      pm.capacities.push_back(rng.uniform_int(1, take));
      at += take;
    }
    Matroid M(Matroid::Kind{pm}, n);

    auto random_partition_base = [&rng, &pm]() {
      std::vector<ElementId> base;
      for (std::size_t b = 0; b < pm.blocks.size(); ++b) {
        std::vector<ElementId> pool = pm.blocks[b].ids();
        for (int i = 0; i < pm.capacities[b]; ++i) {
          std::swap(pool[static_cast<std::size_t>(i)],
                    pool[static_cast<std::size_t>(rng.uniform_int(
                        i, static_cast<int>(pool.size()) - 1))]);
          base.push_back(pool[static_cast<std::size_t>(i)]);
        }
      }
      return ElementSet::from_unsorted(std::move(base));
    };
    ElementSet A = random_partition_base();
    ElementSet B = random_partition_base();
    if (!verify_exchange(M, A, exchange_bijection(M, A, B))) ++bad;
  }

  char buf[128];
  std::snprintf(buf, sizeof buf,
                "100 uniform + 100 partition base pairs, %d rejections", bad);
  report(6, bad == 0, buf);
}

// Criterion 7: the checkers flag the planted violation and accept every
// shipped family at n up to 10.
void checker_sensitivity_suite() {
  ExplicitTable planted;
  planted.n = 2;
  planted.values = {0.0, 1.0, 1.0, 3.0};
  const bool flagged =
      !check_submodular(Objective{Objective::Family{planted}}, GroundSet{2, {}});

  int family_failures = 0;
  for (int n = 3; n <= 10; ++n) {
    for (InstanceFamily family :
         {InstanceFamily::WeightedCoverage, InstanceFamily::FacilityLocation,
          InstanceFamily::Modular}) {
      Instance inst = gen_instance(
          family, n, mix_seed(46, static_cast<std::uint64_t>(n)));
      if (!check_normalized(inst.objective) ||
          !check_monotone(inst.objective, inst.ground) ||
          !check_submodular(inst.objective, inst.ground)) {
        ++family_failures;
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "planted table %s; %d family checker failures (n 3..10)",
                flagged ? "flagged" : "missed", family_failures);
  report(7, flagged && family_failures == 0, buf);
}

// Criterion 8: the exact adversary is a true minimum over every enumerable
// removal, and the greedy heuristic never reports less.
void adversary_oracle_suite() {
  Rng rng(47);
  int bad = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = nth_instance(47, trial, RandomLimits{6, 12, 5, 2});
    const int n = inst.ground.n;
    ElementSet A =
        trial == 0 && n == 12
            ? ElementSet::full(12)
            : set_from_mask(rng.next_u64() & ((std::uint64_t{1} << n) - 1));
    const int alpha = rng.uniform_int(0, 3);

    RemovalResult exact = worst_case_removal_exact(inst.objective, A, alpha);
    bool reached = false;
    const std::vector<ElementId>& ids = A.ids();
    const int sz = static_cast<int>(ids.size());
    for (std::uint64_t bm = 0; bm < (std::uint64_t{1} << sz); ++bm) {
      if (fixtures::popcount64(bm) > alpha) continue;
      std::vector<ElementId> rest;
      for (int i = 0; i < sz; ++i) {
        if (!(bm & (std::uint64_t{1} << i))) {
          rest.push_back(ids[static_cast<std::size_t>(i)]);
        }
      }
      const Value v =
          inst.objective.evaluate(ElementSet::from_unsorted(std::move(rest)));
      if (exact.value > v) ++bad;  // claimed minimum beaten
      if (v == exact.value) reached = true;
    }
    if (!reached) ++bad;
    if (worst_case_removal_greedy(inst.objective, A, alpha).value <
        exact.value) {
      ++bad;
    }
  }
  // One guaranteed full-size case: |A| = 12.
  Instance big = nth_instance(48, 2, RandomLimits{12, 12, 5, 2});
  ElementSet A = ElementSet::full(12);
  RemovalResult exact = worst_case_removal_exact(big.objective, A, 2);
  if (exact.value != fixtures::oracle_min_removal(big.objective, A, 2)) ++bad;

  char buf[128];
  std::snprintf(buf, sizeof buf, "31 sets up to |A| = 12, %d disagreements",
                bad);
  report(8, bad == 0, buf);
}

// Criterion 9: the CLI benchmark is byte-stable across reruns and worker
// counts.
void cli_determinism_suite() {
  const std::string cli = RESILMAX_CLI_PATH;
  auto run = [&cli](const char* threads, const std::string& out) {
    setenv("RESILMAX_THREADS", threads, 1);
    const std::string cmd = cli + " bench --trials 60 --seed 7 --out " + out +
                            " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  const int rc1 = run("1", "acceptance_bench_a.csv");
  const int rc2 = run("1", "acceptance_bench_b.csv");
  const int rc3 = run("4", "acceptance_bench_c.csv");
  unsetenv("RESILMAX_THREADS");

  const std::string a = slurp("acceptance_bench_a.csv");
  const std::string b = slurp("acceptance_bench_b.csv");
  const std::string c = slurp("acceptance_bench_c.csv");
  std::remove("acceptance_bench_a.csv");
  std::remove("acceptance_bench_b.csv");
  std::remove("acceptance_bench_c.csv");

  const bool ok = rc1 == 0 && rc2 == 0 && rc3 == 0 && !a.empty() && a == b &&
                  a == c && a.rfind(kBenchCsvHeader, 0) == 0 &&
                  std::count(a.begin(), a.end(), '\n') == 61;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "bench rerun and 1-vs-4 workers byte-identical (%zu bytes, "
                "rc %d/%d/%d)",
                a.size(), rc1, rc2, rc3);
  report(9, ok, buf);
}

// Criterion 10: the myopic constant dominates the greedy-resilient one.
void bound_ordering_suite() {
  Rng rng(49);
  int bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const double nu = i == 0 ? 0.0 : i == 1 ? 1.0 : rng.uniform01();
    const BoundConstants b = bound_constants(nu);
    if (b.myopic_bound < b.greedy_resilient_bound) ++bad;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "1000 curvature samples, %d inversions", bad);
  report(10, bad == 0, buf);
}

}  // namespace

int main() {
  theorem_and_chain_suite();
  eq4_exhaustive_suite();
  modular_exactness_suite();
  curvature_sanity_suite();
  bijection_suite();
  checker_sensitivity_suite();
  adversary_oracle_suite();
  cli_determinism_suite();
  bound_ordering_suite();
  if (failures == 0) {
    std::cout << "all acceptance criteria pass\n";
  } else {
    std::cout << failures << " acceptance criteria failed\n";
  }
  return failures;
}
