#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "resilmax/bench.hpp"
#include "resilmax/errors.hpp"
#include "resilmax/generator.hpp"
#include "resilmax/instance_io.hpp"
#include "resilmax/solvers.hpp"
#include "resilmax/verify.hpp"

namespace {

using resilmax::ElementSet;
using resilmax::Instance;
using json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw resilmax::Error("cannot write \"" + path + "\"");
  out << text;
}

ElementSet parse_set_arg(const std::string& arg) {
  std::vector<resilmax::ElementId> ids;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw resilmax::InvalidArgumentError("bad element id \"" + tok + "\"");
    }
    if (used != tok.size()) {
      throw resilmax::InvalidArgumentError("bad element id \"" + tok + "\"");
    }
    ids.push_back(id);
  }
  return ElementSet::from_unsorted(std::move(ids));
}

json removal_to_json(const resilmax::RemovalResult& r) {
  json j;
  j["removed"] = r.removed.ids();
  j["remaining"] = r.remaining.ids();
  j["value"] = r.value;
  j["exact"] = r.exact;
  return j;
}

std::string removal_to_text(const resilmax::RemovalResult& r) {
  std::ostringstream out;
  out << "removed: " << r.removed.to_string() << '\n'
      << "remaining: " << r.remaining.to_string() << '\n'
      << "value: " << fmt(r.value) << '\n'
      << "exact: " << (r.exact ? "true" : "false") << '\n';
  return out.str();
}

int cmd_solve(const std::string& file, const std::string& algorithm,
              bool as_json) {
  const Instance inst = resilmax::load_instance(file);
  resilmax::Solution sol;
  if (algorithm == "myopic") {
    sol = resilmax::solve_myopic(inst);
  } else if (algorithm == "greedy") {
    sol = resilmax::solve_greedy_marginal(inst);
  } else if (algorithm == "exact") {
    sol = resilmax::solve_exact_resilient(inst);
  } else {
    throw resilmax::InvalidArgumentError(
        "unknown algorithm \"" + algorithm + "\" (expected myopic|greedy|exact)");
  }

  if (as_json) {
    json j;
    j["algorithm"] = algorithm_name(sol.algorithm);
    j["chosen"] = sol.chosen.ids();
    j["selection_order"] = sol.selection_order;
    j["removal"] = removal_to_json(sol.removal);
    j["resilient_value"] = sol.resilient_value;
    std::cout << j.dump(2) << '\n';
  } else {
    std::ostringstream order;
    order << '[';
    for (std::size_t i = 0; i < sol.selection_order.size(); ++i) {
      if (i > 0) order << ", ";
      order << sol.selection_order[i];
    }
    order << ']';
    std::cout << "algorithm: " << algorithm_name(sol.algorithm) << '\n'
              << "chosen: " << sol.chosen.to_string() << '\n'
              << "selection order: " << order.str() << '\n'
              << "worst-case removed: " << sol.removal.removed.to_string() << '\n'
              << "resilient value: " << fmt(sol.resilient_value) << '\n';
  }
  return 0;
}

int cmd_curvature(const std::string& file, bool as_json) {
  const Instance inst = resilmax::load_instance(file);
  const resilmax::Curvature c =
      resilmax::curvature(inst.objective, inst.ground);
  if (as_json) {
    json j;
    j["nu"] = c.nu;
    j["argmin_element"] = c.argmin_element;
    j["skipped_null_elements"] = c.skipped_null_elements;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "nu: " << fmt(c.nu) << '\n'
              << "argmin element: " << c.argmin_element << '\n'
              << "skipped null elements: "
              << resilmax::ElementSet::from_unsorted(c.skipped_null_elements)
                     .to_string()
              << '\n';
  }
  return 0;
}

int cmd_adversary(const std::string& file, const std::string& set_arg,
                  bool greedy, bool as_json) {
  const Instance inst = resilmax::load_instance(file);
  const ElementSet A = parse_set_arg(set_arg);
  const resilmax::RemovalResult r =
      greedy ? resilmax::worst_case_removal_greedy(inst.objective, A,
                                                   inst.alpha)
             : resilmax::worst_case_removal_exact(inst.objective, A,
                                                  inst.alpha);
  if (as_json) {
    std::cout << removal_to_json(r).dump(2) << '\n';
  } else {
    std::cout << removal_to_text(r);
  }
  return 0;
}

int cmd_verify(const std::string& file, bool as_json) {
  const Instance inst = resilmax::load_instance(file);
  const resilmax::Solution sol = resilmax::solve_myopic(inst);
  const resilmax::Solution opt = resilmax::solve_exact_resilient(inst);
  const resilmax::Certificate cert = resilmax::certify(inst, sol, opt);
  const resilmax::ProofChainReport& pc = cert.proof_chain;

  if (as_json) {
    json pi = json::array();
    for (const auto& [a, b] : pc.pi.pairs) pi.push_back({a, b});
    json j;
    j["nu"] = cert.nu.nu;
    j["chosen"] = sol.chosen.ids();
    j["optimal"] = opt.chosen.ids();
    j["value_sol"] = cert.value_sol;
    j["value_opt"] = cert.value_opt;
    j["bound"] = cert.bound;
    j["ratio"] = cert.ratio;
    j["theorem_holds"] = cert.theorem_holds;
    j["proof_chain"] = {
        {"eq4_lhs", pc.eq4_lhs},       {"eq4_rhs", pc.eq4_rhs},
        {"eq4_holds", pc.eq4_holds},   {"pi", pi},
        {"eq5_holds", pc.eq5_holds},   {"eq6_rhs", pc.eq6_rhs},
        {"eq6_holds", pc.eq6_holds},
        {"mapped_remainder", pc.mapped_remainder.ids()},
        {"eq7_rhs", pc.eq7_rhs},       {"eq7_holds", pc.eq7_holds},
        {"final_lhs", pc.final_lhs},   {"final_rhs", pc.final_rhs},
        {"final_link_holds", pc.final_link_holds},
        {"removal_truncated", pc.removal_truncated},
        {"all_hold", pc.all_hold},
    };
    std::cout << j.dump(2) << '\n';
  } else {
    auto yn = [](bool b) { return b ? "true" : "false"; };
    std::cout << "nu: " << fmt(cert.nu.nu) << " (argmin element "
              << cert.nu.argmin_element << ")\n"
              << "chosen (myopic): " << sol.chosen.to_string() << '\n'
              << "optimal (exact): " << opt.chosen.to_string() << '\n'
              << "value_sol: " << fmt(cert.value_sol) << '\n'
              << "value_opt: " << fmt(cert.value_opt) << '\n'
              << "bound (1-nu)*value_opt: " << fmt(cert.bound) << '\n'
              << "ratio: " << fmt(cert.ratio) << '\n'
              << "theorem_holds: " << yn(cert.theorem_holds) << '\n'
              << "eq4: " << fmt(pc.eq4_lhs) << " >= " << fmt(pc.eq4_rhs)
              << " : " << yn(pc.eq4_holds) << '\n'
              << "eq5 (per-pair singleton dominance): " << yn(pc.eq5_holds)
              << '\n'
              << "eq6: " << fmt(pc.eq4_rhs) << " >= " << fmt(pc.eq6_rhs)
              << " : " << yn(pc.eq6_holds) << '\n'
              << "eq7: " << fmt(pc.eq6_rhs) << " >= " << fmt(pc.eq7_rhs)
              << " : " << yn(pc.eq7_holds) << '\n'
              << "final link: " << fmt(pc.final_lhs) << " >= "
              << fmt(pc.final_rhs) << " : " << yn(pc.final_link_holds) << '\n'
              << "all_hold: " << yn(pc.all_hold) << '\n';
  }
  return cert.theorem_holds && pc.all_hold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resilmax: resilient monotone submodular maximization workbench"};
  app.require_subcommand(1);

  // gen
  std::string gen_family;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  resilmax::GenParams gen_params;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance file");
  gen->add_option("--family", gen_family, "coverage|facility|modular")
      ->required();
  gen->add_option("--n", gen_n, "ground set size")->required();
  gen->add_option("--seed", gen_seed, "PRNG seed")->required();
  gen->add_option("--m", gen_params.m, "items/clients (default 2n)");
  gen->add_option("--rank", gen_params.rank,
                  "uniform matroid rank (default max(1, n/3))");
  gen->add_option("--alpha", gen_params.alpha, "removal budget (default 1)");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // solve
  std::string solve_file, solve_algorithm = "myopic";
  bool solve_json = false;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("file", solve_file, "instance file")->required();
  solve->add_option("--algorithm", solve_algorithm, "myopic|greedy|exact");
  solve->add_flag("--json", solve_json, "JSON report");

  // curvature
  std::string curv_file;
  bool curv_json = false;
  CLI::App* curv =
      app.add_subcommand("curvature", "Report the objective's curvature");
  curv->add_option("file", curv_file, "instance file")->required();
  curv->add_flag("--json", curv_json, "JSON report");

  // adversary
  std::string adv_file, adv_set;
  bool adv_greedy = false, adv_json = false;
  CLI::App* adv = app.add_subcommand(
      "adversary", "Worst-case removal from a set at the file's alpha");
  adv->add_option("file", adv_file, "instance file")->required();
  adv->add_option("--set", adv_set, "comma-separated element ids")->required();
  adv->add_flag("--greedy", adv_greedy, "greedy heuristic instead of exact");
  adv->add_flag("--json", adv_json, "JSON report");

  // verify
  std::string verify_file;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "Certify the guarantee; exit 0 iff every check holds");
  verify->add_option("file", verify_file, "instance file")->required();
  verify->add_flag("--json", verify_json, "JSON report");

  // bench
  std::vector<std::string> bench_families = {"coverage", "facility", "modular"};
  resilmax::BenchParams bench_params;
  std::string bench_out;
  CLI::App* bench =
      app.add_subcommand("bench", "Certified random benchmark, CSV output");
  bench->add_option("--families", bench_families,
                    "families to cycle through (default all three)")
      ->delimiter(',');
  bench->add_option("--trials", bench_params.trials, "total rows");
  bench->add_option("--seed", bench_params.seed, "PRNG seed");
  bench->add_option("--n-max", bench_params.limits.n_max,
                    "largest ground set (default 10)");
  bench->add_option("--rank-max", bench_params.limits.rank_max,
                    "largest matroid rank (default 5)");
  bench->add_option("--alpha-max", bench_params.limits.alpha_max,
                    "largest removal budget (default 2)");
  bench->add_option("--out", bench_out, "CSV file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const Instance inst = resilmax::gen_instance(
          resilmax::family_from_name(gen_family), gen_n, gen_seed, gen_params);
      write_output(resilmax::instance_to_json(inst), gen_out);
      return 0;
    }
    if (solve->parsed()) return cmd_solve(solve_file, solve_algorithm, solve_json);
    if (curv->parsed()) return cmd_curvature(curv_file, curv_json);
    if (adv->parsed()) {
      return cmd_adversary(adv_file, adv_set, adv_greedy, adv_json);
    }
    if (verify->parsed()) return cmd_verify(verify_file, verify_json);
    if (bench->parsed()) {
      bench_params.families.clear();
      for (const std::string& name : bench_families) {
        bench_params.families.push_back(resilmax::family_from_name(name));
      }
      const resilmax::BenchResult result = resilmax::run_bench(bench_params);
      write_output(resilmax::bench_csv(result.rows), bench_out);
      // The summary shares stdout only when the CSV went to a file.
      std::ostream& info = bench_out.empty() ? std::cerr : std::cout;
      info << resilmax::bench_summary(result);
      return result.violations == 0 ? 0 : 1;
    }
  } catch (const resilmax::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
