#include "rdl/point_set.hpp"

#include <algorithm>
#include <iterator>

namespace rdl {

PointSet::PointSet(std::initializer_list<std::string> labels) : PointSet(std::vector<std::string>(labels)) {}

PointSet::PointSet(std::vector<std::string> labels) : members_(std::move(labels)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

PointSet PointSet::from_mask(const std::vector<std::string>& grid_labels, const Mask& mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < mask.size() && i < grid_labels.size(); ++i) {
    if (mask[i]) out.push_back(grid_labels[i]);
  }
  return PointSet(std::move(out));
}

bool PointSet::contains(const std::string& label) const {
  return std::binary_search(members_.begin(), members_.end(), label);
}

bool PointSet::subset_of(const PointSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

std::string PointSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += members_[i];
  }
  return out + "}";
}

}  // namespace rdl
