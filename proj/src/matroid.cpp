#include "resilmax/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "resilmax/errors.hpp"

namespace resilmax {

Matroid::Matroid(Kind kind, int ground_size)
    : kind_(std::move(kind)), n_(ground_size) {
  if (n_ < 0) throw InvalidArgumentError("ground size must be nonnegative");
  if (const auto* u = std::get_if<UniformMatroid>(&kind_)) {
    if (u->rank < 0 || u->rank > n_) {
      throw InvalidArgumentError("uniform rank must lie in [0, n], got " +
                                 std::to_string(u->rank));
    }
    rank_ = u->rank;
  } else {
    const auto& p = std::get<PartitionMatroid>(kind_);
    if (p.capacities.size() != p.blocks.size()) {
      throw InvalidArgumentError("one capacity per block required");
    }
    block_of_.assign(static_cast<std::size_t>(n_), -1);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      for (ElementId x : p.blocks[b]) {
        if (x >= n_) {
          throw InvalidArgumentError("block element " + std::to_string(x) +
                                     " outside ground set");
        }
        if (block_of_[static_cast<std::size_t>(x)] != -1) {
          throw InvalidArgumentError("blocks overlap at element " +
                                     std::to_string(x));
        }
        block_of_[static_cast<std::size_t>(x)] = static_cast<int>(b);
      }
      int cap = p.capacities[b];
      if (cap < 0 || cap > static_cast<int>(p.blocks[b].size())) {
        throw InvalidArgumentError(
            "capacity must lie in [0, block size] for block " +
            std::to_string(b));
      }
      rank_ += cap;
    }
    for (int x = 0; x < n_; ++x) {
      if (block_of_[static_cast<std::size_t>(x)] == -1) {
        throw InvalidArgumentError("element " + std::to_string(x) +
                                   " belongs to no block");
      }
    }
  }
}

bool Matroid::is_partition() const {
  return std::holds_alternative<PartitionMatroid>(kind_);
}

const char* Matroid::kind_name() const {
  return is_partition() ? "partition" : "uniform";
}

void Matroid::validate_ids(const ElementSet& S) const {
  if (!S.empty() && S.ids().back() >= n_) {
    throw InvalidElementError("element " + std::to_string(S.ids().back()) +
                              " outside ground set of size " +
                              std::to_string(n_));
  }
}

bool Matroid::is_independent(const ElementSet& S) const {
  validate_ids(S);
  if (const auto* u = std::get_if<UniformMatroid>(&kind_)) {
    return static_cast<int>(S.size()) <= u->rank;
  }
  const auto& p = std::get<PartitionMatroid>(kind_);
  std::vector<int> counts(p.blocks.size(), 0);
  for (ElementId x : S) {
    int b = block_of_[static_cast<std::size_t>(x)];
    if (++counts[static_cast<std::size_t>(b)] >
        p.capacities[static_cast<std::size_t>(b)]) {
      return false;
    }
  }
  return true;
}

bool Matroid::is_base(const ElementSet& S) const {
  return static_cast<int>(S.size()) == rank_ && is_independent(S);
}

int Matroid::block_of(ElementId x) const {
  if (x < 0 || x >= n_) {
    throw InvalidElementError("element " + std::to_string(x) +
                              " outside ground set of size " +
                              std::to_string(n_));
  }
  return block_of_.empty() ? -1 : block_of_[static_cast<std::size_t>(x)];
}

ElementId ExchangeBijection::image_of(ElementId a) const {
  auto it = std::lower_bound(
      pairs.begin(), pairs.end(), a,
      [](const std::pair<ElementId, ElementId>& p, ElementId v) {
        return p.first < v;
      });
  if (it == pairs.end() || it->first != a) {
    throw InvalidArgumentError("element " + std::to_string(a) +
                               " not in the bijection domain");
  }
  return it->second;
}

ExchangeBijection exchange_bijection(const Matroid& M, const ElementSet& A,
                                     const ElementSet& B) {
  if (!M.is_base(A)) throw NotABaseError("first argument is not a base");
  if (!M.is_base(B)) throw NotABaseError("second argument is not a base");

  ExchangeBijection pi;
  pi.pairs.reserve(A.size());
  for (ElementId a : A.intersect(B)) pi.pairs.emplace_back(a, a);

  ElementSet a_only = A.set_minus(B);
  ElementSet b_only = B.set_minus(A);
  if (M.is_partition()) {
    // Both bases fill every block to capacity, so the exclusive parts agree
    // block by block; matching within the block keeps each swap feasible.
    std::vector<std::vector<ElementId>> a_by_block, b_by_block;
    const auto& p = std::get<PartitionMatroid>(M.kind());
    a_by_block.resize(p.blocks.size());
    b_by_block.resize(p.blocks.size());
    for (ElementId a : a_only) {
      a_by_block[static_cast<std::size_t>(M.block_of(a))].push_back(a);
    }
    for (ElementId b : b_only) {
      b_by_block[static_cast<std::size_t>(M.block_of(b))].push_back(b);
    }
    for (std::size_t b = 0; b < a_by_block.size(); ++b) {
      for (std::size_t i = 0; i < a_by_block[b].size(); ++i) {
        pi.pairs.emplace_back(a_by_block[b][i], b_by_block[b][i]);
      }
    }
  } else {
    auto ita = a_only.begin();
    auto itb = b_only.begin();
    for (; ita != a_only.end(); ++ita, ++itb) {
      pi.pairs.emplace_back(*ita, *itb);
    }
  }
  std::sort(pi.pairs.begin(), pi.pairs.end());
  return pi;
}

bool verify_exchange(const Matroid& M, const ElementSet& A,
                     const ExchangeBijection& pi) {
  // Domain must be exactly A, each element mapped once.
  std::vector<ElementId> domain, image;
  domain.reserve(pi.pairs.size());
  image.reserve(pi.pairs.size());
  for (const auto& [a, b] : pi.pairs) {
    domain.push_back(a);
    image.push_back(b);
    if (b < 0 || b >= M.ground_size()) return false;
  }
  std::sort(domain.begin(), domain.end());
  if (domain != A.ids()) return false;

  // Injectivity.
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    return false;
  }

  ElementSet b_set;
  for (ElementId b : image) b_set = b_set.with(b);

  for (const auto& [a, b] : pi.pairs) {
    // Identity on the intersection of A and the image set.
    if (b_set.contains(a) && b != a) return false;
    // Single-swap independence.
    if (!M.is_independent(A.without(a).with(b))) return false;
  }
  return true;
}

}  // namespace resilmax
