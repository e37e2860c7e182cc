#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rdl {

/// Which half of a paired space a function or point set lives on.
enum class Side { Primal, Dual };

inline Side opposite(Side s) noexcept { return s == Side::Primal ? Side::Dual : Side::Primal; }

/// A finite primal grid, a finite dual grid and an explicit pairing table.
///
/// The pairing table is indexed [dual][primal]. Both grids carry a
/// distinguished zero label, and the zero row and zero column of the table
/// must vanish so that <z*, 0> = <0*, z> = 0 as in any vector pairing.
class PairedSpace {
 public:
  PairedSpace(std::vector<std::string> primal, std::vector<std::string> dual,
              std::vector<std::vector<double>> pairing, std::string zero, std::string dual_zero);

  /// Points given by coordinates; the pairing is the dot product. Labels are
  /// generated from the coordinates when not supplied.
  static PairedSpace from_coordinates(const std::vector<std::vector<double>>& primal,
                                      const std::vector<std::vector<double>>& dual,
                                      std::vector<std::string> primal_labels = {},
                                      std::vector<std::string> dual_labels = {});

  /// The product space A x B with pairing <(a*,b*),(a,b)> = <a*,a> + <b*,b>.
  /// Joint primal index is ia * |B| + ib, joint dual index ja * |B*| + jb.
  static PairedSpace product(const PairedSpace& a, const PairedSpace& b);

  std::size_t size(Side s) const noexcept { return labels(s).size(); }
  std::size_t primal_size() const noexcept { return primal_.size(); }
  std::size_t dual_size() const noexcept { return dual_.size(); }

  const std::vector<std::string>& labels(Side s) const noexcept {
    return s == Side::Primal ? primal_ : dual_;
  }
  const std::string& label(Side s, std::size_t i) const { return labels(s).at(i); }

  /// Index of a label; throws UnknownPoint.
  std::size_t index(Side s, std::string_view label) const;
  std::optional<std::size_t> find(Side s, std::string_view label) const;

  std::size_t zero(Side s) const noexcept { return s == Side::Primal ? zero_ : dual_zero_; }

  double pair(std::size_t dual_i, std::size_t primal_j) const noexcept {
    return pairing_[dual_i * primal_.size() + primal_j];
  }
  /// Pairing where `own` indexes side `s` and `other` the opposite side.
  double pair_from(Side s, std::size_t own, std::size_t other) const noexcept {
    return s == Side::Primal ? pair(other, own) : pair(own, other);
  }

  std::vector<std::vector<double>> pairing_table() const;

 private:
  std::vector<std::string> primal_;
  std::vector<std::string> dual_;
  std::vector<double> pairing_;  // row-major, dual rows
  std::size_t zero_ = 0;
  std::size_t dual_zero_ = 0;
  std::unordered_map<std::string, std::size_t> primal_index_;
  std::unordered_map<std::string, std::size_t> dual_index_;
};

}  // namespace rdl
