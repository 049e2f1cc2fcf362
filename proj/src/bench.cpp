#include "resilmax/bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "resilmax/errors.hpp"
#include "resilmax/parallel.hpp"
#include "resilmax/solvers.hpp"
#include "resilmax/verify.hpp"

namespace resilmax {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* fmt(bool b) { return b ? "true" : "false"; }

BenchRow run_trial(const BenchParams& params, int trial) {
  const InstanceFamily family =
      params.families[static_cast<std::size_t>(trial) % params.families.size()];
  Rng rng(mix_seed(params.seed, static_cast<std::uint64_t>(trial)));
  const Instance inst = random_instance(family, rng, params.limits);

  const auto start = std::chrono::steady_clock::now();
  const Solution myopic = solve_myopic(inst);
  const Solution greedy = solve_greedy_marginal(inst);
  const Solution exact = solve_exact_resilient(inst);
  const Certificate cert = certify(inst, myopic, exact);
  const auto stop = std::chrono::steady_clock::now();

  BenchRow row;
  row.instance_id =
      std::string(family_name(family)) + "-" + std::to_string(trial);
  row.n = inst.ground.n;
  row.matroid_type = inst.matroid.kind_name();
  row.rank = inst.matroid.rank();
  row.alpha = inst.alpha;
  row.nu = cert.nu.nu;
  row.myopic_value = cert.value_sol;
  row.greedy_value = greedy.resilient_value;
  row.exact_value = cert.value_opt;
  row.bound = cert.bound;
  row.ratio_myopic = cert.ratio;
  row.ratio_greedy =
      cert.value_opt == 0.0 ? 1.0 : greedy.resilient_value / cert.value_opt;
  row.theorem_holds = cert.theorem_holds;
  row.proof_chain_holds = cert.proof_chain.all_hold;
  row.wall_time_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

bool row_violates(const BenchRow& row) {
  return !row.theorem_holds || !row.proof_chain_holds ||
         row.ratio_myopic < 1.0 - row.nu - 1e-9;
}

}  // namespace

BenchResult run_bench(const BenchParams& params) {
  if (params.trials < 0) throw InvalidArgumentError("trials must be >= 0");
  if (params.families.empty()) {
    throw InvalidArgumentError("at least one family is required");
  }

  BenchResult result;
  result.rows = parallel_map<BenchRow>(
      static_cast<std::size_t>(params.trials),
      [&params](std::size_t i) { return run_trial(params, static_cast<int>(i)); });

  FamilyStats stats[3];
  double sums[3] = {0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const InstanceFamily family = params.families[i % params.families.size()];
    const std::size_t f = static_cast<std::size_t>(family);
    const BenchRow& row = result.rows[i];
    if (stats[f].rows == 0 || row.ratio_myopic < stats[f].min_ratio) {
      stats[f].min_ratio = row.ratio_myopic;
    }
    sums[f] += row.ratio_myopic;
    ++stats[f].rows;
  }
  for (InstanceFamily family : {InstanceFamily::WeightedCoverage,
                                InstanceFamily::FacilityLocation,
                                InstanceFamily::Modular}) {
    const std::size_t f = static_cast<std::size_t>(family);
    if (stats[f].rows == 0) continue;
    stats[f].family = family;
    stats[f].mean_ratio = sums[f] / stats[f].rows;
    result.per_family.push_back(stats[f]);
  }

  for (const BenchRow& row : result.rows) {
    if (row_violates(row)) ++result.violations;
    result.total_wall_time_ms += row.wall_time_ms;
  }
  return result;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = kBenchCsvHeader;
  out += '\n';
  for (const BenchRow& row : rows) {
    out += row.instance_id;
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += row.matroid_type;
    out += ',';
    out += std::to_string(row.rank);
    out += ',';
    out += std::to_string(row.alpha);
    out += ',';
    out += fmt(row.nu);
    out += ',';
    out += fmt(row.myopic_value);
    out += ',';
    out += fmt(row.greedy_value);
    out += ',';
    out += fmt(row.exact_value);
    out += ',';
    out += fmt(row.bound);
    out += ',';
    out += fmt(row.ratio_myopic);
    out += ',';
    out += fmt(row.ratio_greedy);
    out += ',';
    out += fmt(row.theorem_holds);
    out += ',';
    out += fmt(row.proof_chain_holds);
    // Pinned to 0 in the file: wall time is the one measured column that
    // would break byte-identical reruns.
    out += ",0\n";
  }
  return out;
}

std::string bench_summary(const BenchResult& result) {
  std::ostringstream out;
  out << "rows: " << result.rows.size() << '\n';
  for (const FamilyStats& stats : result.per_family) {
    out << family_name(stats.family) << ": rows=" << stats.rows
        << " min_ratio=" << fmt(stats.min_ratio)
        << " mean_ratio=" << fmt(stats.mean_ratio) << '\n';
  }
  char t[64];
  std::snprintf(t, sizeof t, "%.1f", result.total_wall_time_ms);
  out << "violations: " << result.violations << '\n';
  out << "total solver time: " << t << " ms\n";
  return out.str();
}

}  // namespace resilmax
