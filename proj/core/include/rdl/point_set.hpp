#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "rdl/paired_space.hpp"

namespace rdl {

/// Membership flags over one grid, indexed like the grid.
using Mask = std::vector<char>;

/// A finite set of point labels kept sorted, so equal sets compare equal.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::initializer_list<std::string> labels);
  explicit PointSet(std::vector<std::string> labels);

  /// Labels of the grid points whose mask entry is set.
  static PointSet from_mask(const std::vector<std::string>& grid_labels, const Mask& mask);

  const std::vector<std::string>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const std::string& label) const;
  bool subset_of(const PointSet& other) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

  friend PointSet set_union(const PointSet& a, const PointSet& b);
  friend PointSet set_intersection(const PointSet& a, const PointSet& b);

  std::string to_string() const;

 private:
  std::vector<std::string> members_;
};

}  // namespace rdl
