#include "resilmax/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <unordered_map>

#include "resilmax/errors.hpp"

namespace resilmax {

namespace {

struct IdVectorHash {
  std::size_t operator()(const std::vector<ElementId>& ids) const {
    // FNV-1a over the id sequence.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (ElementId x : ids) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

int family_ground_size(const Objective::Family& family) {
  return std::visit(
      [](const auto& f) -> int {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, WeightedCoverage>) {
          return static_cast<int>(f.covers.size());
        } else if constexpr (std::is_same_v<T, FacilityLocation>) {
          return static_cast<int>(f.value_matrix.size());
        } else if constexpr (std::is_same_v<T, Modular>) {
          return static_cast<int>(f.weights.size());
        } else {
          return f.n;
        }
      },
      family);
}

void require_nonnegative_finite(const std::vector<double>& values,
                                const char* what) {
  for (double v : values) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InvalidArgumentError(std::string(what) +
                                 " must be nonnegative and finite");
    }
  }
}

void validate_family(const Objective::Family& family) {
  if (const auto* cov = std::get_if<WeightedCoverage>(&family)) {
    require_nonnegative_finite(cov->item_weights, "item weight");
    int m = static_cast<int>(cov->item_weights.size());
    for (const auto& items : cov->covers) {
      for (int item : items) {
        if (item < 0 || item >= m) {
          throw InvalidArgumentError("cover refers to item " +
                                     std::to_string(item) + " but there are " +
                                     std::to_string(m) + " items");
        }
      }
    }
  } else if (const auto* fac = std::get_if<FacilityLocation>(&family)) {
    std::size_t m = fac->value_matrix.empty() ? 0 : fac->value_matrix[0].size();
    for (const auto& row : fac->value_matrix) {
      if (row.size() != m) {
        throw InvalidArgumentError("value matrix rows must have equal length");
      }
      require_nonnegative_finite(row, "facility value");
    }
  } else if (const auto* mod = std::get_if<Modular>(&family)) {
    require_nonnegative_finite(mod->weights, "modular weight");
  } else {
    const auto& tab = std::get<ExplicitTable>(family);
    if (tab.n < 0 || tab.n > 16) {
      throw InstanceTooLargeError("explicit tables support n in [0, 16], got " +
                                  std::to_string(tab.n));
    }
    if (tab.values.size() != (std::size_t{1} << tab.n)) {
      throw InvalidArgumentError(
          "explicit table must list one value per subset (" +
          std::to_string(std::size_t{1} << tab.n) + " expected, " +
          std::to_string(tab.values.size()) + " given)");
    }
    require_nonnegative_finite(tab.values, "table value");
  }
}

bool all_integral(const std::vector<double>& values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::trunc(v) == v; });
}

}  // namespace

/// Bounded concurrent map from canonical id sequence to f value. When full,
/// new entries are discarded; lookups then recompute, which is safe because
/// cached and fresh values are identical.
class EvalCache {
 public:
  explicit EvalCache(std::size_t capacity) : capacity_(capacity) {}

  bool lookup(const std::vector<ElementId>& key, Value& out) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }

  void insert(const std::vector<ElementId>& key, Value v) {
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.size() >= capacity_) return;
    map_.emplace(key, v);
  }

 private:
  mutable std::mutex mu_;
  std::size_t capacity_;
  std::unordered_map<std::vector<ElementId>, Value, IdVectorHash> map_;
};

Objective::Objective(Family family, bool enable_cache,
                     std::size_t cache_capacity)
    : family_(std::move(family)), n_(family_ground_size(family_)) {
  validate_family(family_);
  if (enable_cache) cache_ = std::make_shared<EvalCache>(cache_capacity);
}

void Objective::validate_ids(const ElementSet& S) const {
  if (!S.empty() && S.ids().back() >= n_) {
    throw InvalidElementError("element " + std::to_string(S.ids().back()) +
                              " outside ground set of size " +
                              std::to_string(n_));
  }
}

Value Objective::evaluate(const ElementSet& S) const {
  validate_ids(S);
  if (cache_) {
    Value v;
    if (cache_->lookup(S.ids(), v)) return v;
    v = evaluate_uncached(S);
    cache_->insert(S.ids(), v);
    return v;
  }
  return evaluate_uncached(S);
}

Value Objective::evaluate_uncached(const ElementSet& S) const {
  return std::visit(
      [&S](const auto& f) -> Value {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, WeightedCoverage>) {
          std::vector<char> covered(f.item_weights.size(), 0);
          for (ElementId x : S) {
            for (int item : f.covers[static_cast<std::size_t>(x)]) {
              covered[static_cast<std::size_t>(item)] = 1;
            }
          }
          Value total = 0.0;
          for (std::size_t i = 0; i < covered.size(); ++i) {
            if (covered[i]) total += f.item_weights[i];
          }
          return total;
        } else if constexpr (std::is_same_v<T, FacilityLocation>) {
          if (S.empty() || f.value_matrix.empty()) return 0.0;
          std::size_t m = f.value_matrix[0].size();
          Value total = 0.0;
          for (std::size_t j = 0; j < m; ++j) {
            Value best = 0.0;
            for (ElementId x : S) {
              best = std::max(best,
                              f.value_matrix[static_cast<std::size_t>(x)][j]);
            }
            total += best;
          }
          return total;
        } else if constexpr (std::is_same_v<T, Modular>) {
          Value total = 0.0;
          for (ElementId x : S) total += f.weights[static_cast<std::size_t>(x)];
          return total;
        } else {
          return f.values[S.mask()];
        }
      },
      family_);
}

Value Objective::marginal(ElementId x, const ElementSet& S) const {
  if (x < 0 || x >= n_) {
    throw InvalidElementError("element " + std::to_string(x) +
                              " outside ground set of size " +
                              std::to_string(n_));
  }
  if (S.contains(x)) {
    throw InvalidArgumentError("marginal requires x outside S, got x = " +
                               std::to_string(x));
  }
  return evaluate(S.with(x)) - evaluate(S);
}

Value Objective::singleton(ElementId x) const {
  return evaluate(ElementSet{x});
}

bool Objective::integer_valued() const {
  return std::visit(
      [](const auto& f) -> bool {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, WeightedCoverage>) {
          return all_integral(f.item_weights);
        } else if constexpr (std::is_same_v<T, FacilityLocation>) {
          return std::all_of(f.value_matrix.begin(), f.value_matrix.end(),
                             all_integral);
        } else if constexpr (std::is_same_v<T, Modular>) {
          return all_integral(f.weights);
        } else {
          return all_integral(f.values);
        }
      },
      family_);
}

Curvature curvature(const Objective& f, const GroundSet& ground) {
  if (ground.n < 1) {
    throw InvalidArgumentError("curvature requires a nonempty ground set");
  }
  if (ground.n != f.ground_size()) {
    throw InvalidArgumentError("objective and ground set sizes differ");
  }
  ElementSet omega = ground.all();
  Value f_omega = f.evaluate(omega);

  Curvature result;
  double best_ratio = std::numeric_limits<double>::infinity();
  result.argmin_element = -1;
  for (ElementId x = 0; x < ground.n; ++x) {
    Value fx = f.singleton(x);
    if (fx == 0.0) {
      result.skipped_null_elements.push_back(x);
      continue;
    }
    double ratio = (f_omega - f.evaluate(omega.without(x))) / fx;
    if (ratio < best_ratio) {  // strict: ties keep the smallest id
      best_ratio = ratio;
      result.argmin_element = x;
    }
  }
  if (result.argmin_element == -1) {
    throw DegenerateObjectiveError(
        "every singleton has value 0; curvature is undefined");
  }
  result.nu = std::clamp(1.0 - best_ratio, 0.0, 1.0);
  return result;
}

namespace {

constexpr int kMaxCheckerGroundSize = 16;
constexpr double kCheckerTolerance = 1e-12;

void require_checkable(const Objective& f) {
  if (f.ground_size() > kMaxCheckerGroundSize) {
    throw InstanceTooLargeError(
        "exhaustive checkers support n <= 16, got n = " +
        std::to_string(f.ground_size()));
  }
}

// f over all 2^n subsets, indexed by bitmask.
std::vector<Value> value_table(const Objective& f) {
  int n = f.ground_size();
  std::vector<Value> table(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < table.size(); ++m) {
    table[m] = f.evaluate(set_from_mask(m));
  }
  return table;
}

}  // namespace

bool check_normalized(const Objective& f) {
  require_checkable(f);
  double tol = f.integer_valued() ? 0.0 : kCheckerTolerance;
  return std::abs(f.evaluate(ElementSet{})) <= tol;
}

bool check_monotone(const Objective& f, const GroundSet& ground) {
  require_checkable(f);
  if (ground.n != f.ground_size()) {
    throw InvalidArgumentError("objective and ground set sizes differ");
  }
  double tol = f.integer_valued() ? 0.0 : kCheckerTolerance;
  std::vector<Value> table = value_table(f);

  // f(S) <= f(T) for every S ⊆ T, via submask enumeration.
  for (std::uint64_t t = 0; t < table.size(); ++t) {
    for (std::uint64_t s = t;; s = (s - 1) & t) {
      if (table[s] > table[t] + tol) return false;
      if (s == 0) break;
    }
  }
  return true;
}

bool check_submodular(const Objective& f, const GroundSet& ground) {
  require_checkable(f);
  if (ground.n != f.ground_size()) {
    throw InvalidArgumentError("objective and ground set sizes differ");
  }
  double tol = f.integer_valued() ? 0.0 : kCheckerTolerance;
  std::vector<Value> table = value_table(f);
  int n = f.ground_size();

  // Diminishing returns: the gain of x at S ⊆ T dominates the gain at T,
  // for every x outside T.
  for (std::uint64_t t = 0; t < table.size(); ++t) {
    for (int x = 0; x < n; ++x) {
      std::uint64_t xbit = std::uint64_t{1} << x;
      if (t & xbit) continue;
      Value gain_t = table[t | xbit] - table[t];
      for (std::uint64_t s = t;; s = (s - 1) & t) {
        Value gain_s = table[s | xbit] - table[s];
        if (gain_s < gain_t - tol) return false;
        if (s == 0) break;
      }
    }
  }
  return true;
}

}  // namespace resilmax
