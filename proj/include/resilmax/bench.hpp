#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resilmax/generator.hpp"

namespace resilmax {

struct BenchParams {
  std::vector<InstanceFamily> families = {InstanceFamily::WeightedCoverage,
                                          InstanceFamily::FacilityLocation,
                                          InstanceFamily::Modular};
  int trials = 300;          // total rows; trial i uses families[i % size]
  std::uint64_t seed = 42;
  RandomLimits limits;       // desk-scale defaults: n <= 10, rank <= 5, alpha <= 2
};

/// One benchmark row. The CSV prints wall_time_ms as 0 so that the file is
/// a pure function of (seed, params) regardless of load or thread count;
/// measured times are reported in the summary only.
struct BenchRow {
  std::string instance_id;
  int n = 0;
  std::string matroid_type;
  int rank = 0;
  int alpha = 0;
  double nu = 0.0;
  Value myopic_value = 0.0;
  Value greedy_value = 0.0;
  Value exact_value = 0.0;
  Value bound = 0.0;
  double ratio_myopic = 1.0;
  double ratio_greedy = 1.0;
  bool theorem_holds = false;
  bool proof_chain_holds = false;
  double wall_time_ms = 0.0;  // measured; excluded from the CSV
};

struct FamilyStats {
  InstanceFamily family;
  int rows = 0;
  double min_ratio = 1.0;   // of ratio_myopic
  double mean_ratio = 1.0;
};

struct BenchResult {
  std::vector<BenchRow> rows;  // trial order
  std::vector<FamilyStats> per_family;
  int violations = 0;          // rows failing the theorem, the chain, or the ratio bound
  double total_wall_time_ms = 0.0;
};

inline constexpr const char* kBenchCsvHeader =
    "instance_id,n,matroid_type,rank,alpha,nu,myopic_value,greedy_value,"
    "exact_value,bound,ratio_myopic,ratio_greedy,theorem_holds,"
    "proof_chain_holds,wall_time_ms";

/// Runs all trials (fanning out across workers, results gathered in trial
/// order) and certifies every row. Deterministic for a fixed seed.
BenchResult run_bench(const BenchParams& params);

/// Header plus one line per row; decimals carry 12 significant digits.
std::string bench_csv(const std::vector<BenchRow>& rows);

std::string bench_summary(const BenchResult& result);

}  // namespace resilmax
