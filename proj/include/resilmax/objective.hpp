#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "resilmax/element_set.hpp"

namespace resilmax {

/// f(S) = total weight of the items covered by the elements of S.
struct WeightedCoverage {
  std::vector<double> item_weights;      // one weight per item
  std::vector<std::vector<int>> covers;  // per element: covered item indices
};

/// f(S) = sum over clients of the best value any element of S offers them;
/// f of the empty set is 0.
struct FacilityLocation {
  std::vector<std::vector<double>> value_matrix;  // n rows x m clients
};

/// f(S) = sum of per-element weights.
struct Modular {
  std::vector<double> weights;
};

/// f listed for every subset of {0..n-1}; index is the subset bitmask
/// (bit i set <=> element i present). The representation does not imply
/// monotonicity or submodularity, so instance loading runs the checkers.
struct ExplicitTable {
  int n = 0;
  std::vector<double> values;  // size 1 << n
};

struct Curvature {
  double nu = 0.0;
  ElementId argmin_element = -1;
  std::vector<ElementId> skipped_null_elements;
};

class EvalCache;

/// Normalized monotone submodular objective oracle. Immutable after
/// construction; concurrent evaluation is safe. The optional cache is
/// value-transparent: with or without it, evaluate returns identical bits.
class Objective {
 public:
  using Family =
      std::variant<WeightedCoverage, FacilityLocation, Modular, ExplicitTable>;

  static constexpr std::size_t kDefaultCacheCapacity = std::size_t{1} << 20;

  explicit Objective(Family family, bool enable_cache = false,
                     std::size_t cache_capacity = kDefaultCacheCapacity);

  int ground_size() const { return n_; }
  const Family& family() const { return family_; }
  bool cache_enabled() const { return cache_ != nullptr; }

  /// f(S).
  Value evaluate(const ElementSet& S) const;

  /// f(S ∪ {x}) − f(S). Requires x ∉ S.
  Value marginal(ElementId x, const ElementSet& S) const;

  /// f({x}).
  Value singleton(ElementId x) const;

  /// True when every weight in the family is an integer, in which case the
  /// checkers compare exactly instead of with the 1e-12 tolerance.
  bool integer_valued() const;

 private:
  Value evaluate_uncached(const ElementSet& S) const;
  void validate_ids(const ElementSet& S) const;

  Family family_;
  int n_ = 0;
  std::shared_ptr<EvalCache> cache_;  // shared so copies reuse the same cache
};

/// Curvature nu = 1 − min over x with f({x}) > 0 of
/// (f(Ω) − f(Ω∖{x})) / f({x}), clamped to [0, 1]. Elements with
/// f({x}) = 0 cannot affect any solution and are skipped and reported;
/// ties in the min go to the smallest id. Throws DegenerateObjectiveError
/// when every element is null.
Curvature curvature(const Objective& f, const GroundSet& ground);

/// Exhaustive property checkers for desk-scale objectives (n ≤ 16).
bool check_normalized(const Objective& f);
bool check_monotone(const Objective& f, const GroundSet& ground);
bool check_submodular(const Objective& f, const GroundSet& ground);

}  // namespace resilmax
