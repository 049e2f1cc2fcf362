#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "resilmax/element_set.hpp"

namespace resilmax {

/// Sets of cardinality ≤ rank are independent.
struct UniformMatroid {
  int rank = 0;
};

/// Ground set split into disjoint blocks covering it, each with a capacity.
struct PartitionMatroid {
  std::vector<ElementSet> blocks;
  std::vector<int> capacities;  // one per block, capacity ≤ block size
};

/// Independence oracle over {0..n-1}. Immutable; queries are thread-safe.
class Matroid {
 public:
  using Kind = std::variant<UniformMatroid, PartitionMatroid>;

  /// Validates structure: uniform rank in [0, n]; partition blocks disjoint,
  /// covering the ground set, with 0 ≤ capacity ≤ block size. Capacities
  /// bounded by block sizes guarantee every independent set extends to a
  /// base, which the solvers rely on.
  Matroid(Kind kind, int ground_size);

  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  const Kind& kind() const { return kind_; }
  bool is_partition() const;
  const char* kind_name() const;  // "uniform" | "partition"

  bool is_independent(const ElementSet& S) const;
  bool is_base(const ElementSet& S) const;

  /// Block index of an element; -1 for uniform matroids.
  int block_of(ElementId x) const;

 private:
  void validate_ids(const ElementSet& S) const;

  Kind kind_;
  int n_ = 0;
  int rank_ = 0;
  std::vector<int> block_of_;  // partition only
};

/// Base-exchange bijection between two bases A and B: identity on A ∩ B,
/// and swapping any a for its image keeps A independent.
struct ExchangeBijection {
  std::vector<std::pair<ElementId, ElementId>> pairs;  // (a, π(a)), a ascending

  /// π(a); throws InvalidArgumentError if a is not in the domain.
  ElementId image_of(ElementId a) const;
};

/// Constructs the bijection witnessing the base-exchange property:
/// identity on A ∩ B; for a uniform matroid the remaining elements of A∖B
/// and B∖A are matched in ascending id order; for a partition matroid the
/// matching is ascending within each block (both bases saturate every
/// block's capacity, so the per-block counts agree). Throws NotABaseError
/// unless both arguments are bases.
ExchangeBijection exchange_bijection(const Matroid& M, const ElementSet& A,
                                     const ElementSet& B);

/// Direct enumeration check of the three bijection invariants: pairs cover
/// exactly A with distinct images, identity on A ∩ image, and
/// (A ∖ {a}) ∪ {π(a)} independent for every a.
bool verify_exchange(const Matroid& M, const ElementSet& A,
                     const ExchangeBijection& pi);

}  // namespace resilmax
