#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace resilmax {

using ElementId = int;
using Value = double;

/// Canonical set of element ids: strictly increasing, duplicate-free.
/// Lexicographic comparison of the underlying sequence is the tie-break
/// order used by every deterministic reduction in the library.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);

  /// Sorts and validates; rejects duplicates and negative ids.
  static ElementSet from_unsorted(std::vector<ElementId> ids);

  /// {0, 1, ..., n-1}
  static ElementSet full(int n);

  bool contains(ElementId x) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  /// Copy with x inserted (no-op if already present).
  ElementSet with(ElementId x) const;
  /// Copy with x removed (no-op if absent).
  ElementSet without(ElementId x) const;

  ElementSet set_minus(const ElementSet& other) const;
  ElementSet set_union(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  const std::vector<ElementId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  /// Bitmask with bit i set iff element i is present. All ids must be < 64.
  std::uint64_t mask() const;

  std::string to_string() const;  // "{0, 2, 5}"

  bool operator==(const ElementSet&) const = default;
  auto operator<=>(const ElementSet&) const = default;

 private:
  std::vector<ElementId> ids_;
};

/// Inverse of ElementSet::mask().
ElementSet set_from_mask(std::uint64_t mask);

/// Ground set {0, ..., n-1} with optional display labels.
struct GroundSet {
  int n = 0;
  std::vector<std::string> labels;  // empty, or one label per element

  bool contains(ElementId x) const { return x >= 0 && x < n; }
  ElementSet all() const { return ElementSet::full(n); }
};

}  // namespace resilmax
