#include "resilmax/verify.hpp"

#include <algorithm>
#include <utility>

#include "resilmax/adversary.hpp"
#include "resilmax/errors.hpp"

namespace resilmax {

ProofChainReport check_proof_chain(const Instance& inst, const Solution& sol,
                                   const Solution& opt) {
  if (sol.algorithm != Algorithm::Myopic) {
    throw WrongAlgorithmError(
        "proof chain requires a myopic solution, got " +
        std::string(algorithm_name(sol.algorithm)));
  }
  if (opt.algorithm != Algorithm::ExactResilient) {
    throw WrongAlgorithmError(
        "proof chain requires an exact resilient optimum, got " +
        std::string(algorithm_name(opt.algorithm)));
  }

  const Objective& f = inst.objective;
  ProofChainReport r;
  r.nu = curvature(f, inst.ground).nu;
  const double scale = 1.0 - r.nu;

  const RemovalResult sol_removal =
      worst_case_removal_exact(f, sol.chosen, inst.alpha);
  const ElementSet& remaining = sol_removal.remaining;
  r.removal_truncated =
      static_cast<std::size_t>(inst.alpha) >= sol.chosen.size();

  r.eq4_lhs = sol_removal.value;
  Value singleton_sum = 0.0;
  for (ElementId a : remaining) singleton_sum += f.singleton(a);
  r.eq4_rhs = scale * singleton_sum;
  r.eq4_holds = holds_geq(r.eq4_lhs, r.eq4_rhs);

  r.pi = exchange_bijection(inst.matroid, sol.chosen, opt.chosen);
  r.eq5_holds = true;
  for (const auto& [a, b] : r.pi.pairs) {
    if (!holds_geq(f.singleton(a), f.singleton(b))) r.eq5_holds = false;
  }

  Value mapped_sum = 0.0;
  std::vector<ElementId> mapped;
  mapped.reserve(remaining.size());
  for (ElementId a : remaining) {
    const ElementId b = r.pi.image_of(a);
    mapped_sum += f.singleton(b);
    mapped.push_back(b);
  }
  r.eq6_rhs = scale * mapped_sum;
  r.eq6_holds = holds_geq(r.eq4_rhs, r.eq6_rhs);

  r.mapped_remainder = ElementSet::from_unsorted(std::move(mapped));
  r.eq7_rhs = scale * f.evaluate(r.mapped_remainder);
  r.eq7_holds = holds_geq(r.eq6_rhs, r.eq7_rhs);

  r.final_lhs = f.evaluate(r.mapped_remainder);
  r.final_rhs = worst_case_removal_exact(f, opt.chosen, inst.alpha).value;
  r.final_link_holds = holds_geq(r.final_lhs, r.final_rhs);

  r.all_hold = r.eq4_holds && r.eq5_holds && r.eq6_holds && r.eq7_holds &&
               r.final_link_holds;
  return r;
}

Certificate certify(const Instance& inst, const Solution& sol,
                    const Solution& opt) {
  Certificate c;
  c.nu = curvature(inst.objective, inst.ground);
  c.value_sol =
      worst_case_removal_exact(inst.objective, sol.chosen, inst.alpha).value;
  c.value_opt =
      worst_case_removal_exact(inst.objective, opt.chosen, inst.alpha).value;
  c.bound = (1.0 - c.nu.nu) * c.value_opt;
  c.ratio = c.value_opt == 0.0 ? 1.0 : c.value_sol / c.value_opt;
  c.theorem_holds = holds_geq(c.value_sol, c.bound);
  c.proof_chain = check_proof_chain(inst, sol, opt);
  return c;
}

BoundConstants bound_constants(double nu) {
  if (!(nu >= 0.0 && nu <= 1.0)) {
    throw InvalidArgumentError("curvature must lie in [0, 1], got " +
                               std::to_string(nu));
  }
  return BoundConstants{1.0 - nu, (1.0 - nu) / (1.0 + nu)};
}

}  // namespace resilmax
