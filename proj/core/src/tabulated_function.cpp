#include "rdl/tabulated_function.hpp"

#include <algorithm>

namespace rdl {

TabulatedFunction::TabulatedFunction(std::shared_ptr<const PairedSpace> space, Side side,
                                     std::vector<ExtReal> values, Codomain codomain)
    : space_(std::move(space)), side_(side), values_(std::move(values)), codomain_(codomain) {
  if (!space_) throw Error(ErrorCode::ValidationError, "tabulated function without a space");
  if (values_.size() != space_->size(side_)) {
    throw Error(ErrorCode::DimensionMismatch, "function table size differs from its grid");
  }
  if (codomain_ == Codomain::UpperExtended) {
    for (ExtReal v : values_) {
      if (v.is_neg_inf()) throw Error(ErrorCode::ValidationError, "-inf in a function valued in R u {+inf}");
    }
  }
}

bool TabulatedFunction::has_finite_value() const noexcept {
  return std::any_of(values_.begin(), values_.end(), [](ExtReal v) { return v.is_finite(); });
}

}  // namespace rdl
