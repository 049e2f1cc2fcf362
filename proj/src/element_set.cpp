#include "resilmax/element_set.hpp"

#include <algorithm>
#include <sstream>

#include "resilmax/errors.hpp"

namespace resilmax {

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(from_unsorted(std::vector<ElementId>(ids))) {}

ElementSet ElementSet::from_unsorted(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0) {
      throw InvalidElementError("element id must be nonnegative, got " +
                                std::to_string(ids[i]));
    }
    if (i > 0 && ids[i] == ids[i - 1]) {
      throw InvalidArgumentError("duplicate element id " +
                                 std::to_string(ids[i]));
    }
  }
  ElementSet s;
  s.ids_ = std::move(ids);
  return s;
}

ElementSet ElementSet::full(int n) {
  ElementSet s;
  s.ids_.resize(static_cast<std::size_t>(n > 0 ? n : 0));
  for (int i = 0; i < n; ++i) s.ids_[static_cast<std::size_t>(i)] = i;
  return s;
}

bool ElementSet::contains(ElementId x) const {
  return std::binary_search(ids_.begin(), ids_.end(), x);
}

ElementSet ElementSet::with(ElementId x) const {
  ElementSet s = *this;
  auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), x);
  if (it == s.ids_.end() || *it != x) s.ids_.insert(it, x);
  return s;
}

ElementSet ElementSet::without(ElementId x) const {
  ElementSet s = *this;
  auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), x);
  if (it != s.ids_.end() && *it == x) s.ids_.erase(it);
  return s;
}

ElementSet ElementSet::set_minus(const ElementSet& other) const {
  ElementSet s;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

ElementSet ElementSet::set_union(const ElementSet& other) const {
  ElementSet s;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet s;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

std::uint64_t ElementSet::mask() const {
  std::uint64_t m = 0;
  for (ElementId x : ids_) {
    if (x >= 64) {
      throw InvalidArgumentError("bitmask form requires ids < 64, got " +
                                 std::to_string(x));
    }
    m |= std::uint64_t{1} << x;
  }
  return m;
}

std::string ElementSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) out << ", ";
    out << ids_[i];
  }
  out << '}';
  return out.str();
}

ElementSet set_from_mask(std::uint64_t mask) {
  std::vector<ElementId> ids;
  for (int i = 0; i < 64; ++i) {
    if (mask & (std::uint64_t{1} << i)) ids.push_back(i);
  }
  return ElementSet::from_unsorted(std::move(ids));
}

}  // namespace resilmax
