#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "rdl/ext_real.hpp"
#include "rdl/paired_space.hpp"

namespace rdl {

/// Value range of a tabulated function.
enum class Codomain {
  UpperExtended,  ///< R u {+inf}; -inf is rejected
  Extended,       ///< R u {+inf, -inf}; conjugate-side objects
};

/// A function on one side of a PairedSpace, stored as one value per point.
class TabulatedFunction {
 public:
  TabulatedFunction(std::shared_ptr<const PairedSpace> space, Side side, std::vector<ExtReal> values,
                    Codomain codomain = Codomain::UpperExtended);

  const PairedSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const PairedSpace>& space_ptr() const noexcept { return space_; }
  Side side() const noexcept { return side_; }
  Codomain codomain() const noexcept { return codomain_; }

  std::size_t size() const noexcept { return values_.size(); }
  ExtReal operator[](std::size_t i) const noexcept { return values_[i]; }
  ExtReal at(std::string_view label) const { return values_[space_->index(side_, label)]; }
  const std::vector<ExtReal>& values() const noexcept { return values_; }

  /// True when at least one value is finite.
  bool has_finite_value() const noexcept;

 private:
  std::shared_ptr<const PairedSpace> space_;
  Side side_;
  std::vector<ExtReal> values_;
  Codomain codomain_;
};

}  // namespace rdl
