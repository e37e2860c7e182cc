#include "rdl/paired_space.hpp"

#include <cmath>
#include <cstdio>

#include "rdl/error.hpp"

namespace rdl {
namespace {

std::unordered_map<std::string, std::size_t> build_index(const std::vector<std::string>& labels,
                                                         const char* what) {
  std::unordered_map<std::string, std::size_t> idx;
  idx.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!idx.emplace(labels[i], i).second) {
      throw Error(ErrorCode::ValidationError,
                  std::string("duplicate ") + what + " label '" + labels[i] + "'");
    }
  }
  return idx;
}

std::string coordinate_label(const std::vector<double>& v) {
  std::string out;
  if (v.size() != 1) out += "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v[i] == 0.0 ? 0.0 : v[i]);
    if (i) out += ",";
    out += buf;
  }
  if (v.size() != 1) out += ")";
  return out;
}

}  // namespace

PairedSpace::PairedSpace(std::vector<std::string> primal, std::vector<std::string> dual,
                         std::vector<std::vector<double>> pairing, std::string zero,
                         std::string dual_zero)
    : primal_(std::move(primal)), dual_(std::move(dual)) {
  if (primal_.empty() || dual_.empty()) {
    throw Error(ErrorCode::ValidationError, "paired space needs nonempty primal and dual grids");
  }
  primal_index_ = build_index(primal_, "primal");
  dual_index_ = build_index(dual_, "dual");
  if (pairing.size() != dual_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "pairing table needs one row per dual point");
  }
  pairing_.reserve(dual_.size() * primal_.size());
  for (const auto& row : pairing) {
    if (row.size() != primal_.size()) {
      throw Error(ErrorCode::DimensionMismatch, "pairing row length differs from primal grid size");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw Error(ErrorCode::ValidationError, "pairing entries must be finite");
      pairing_.push_back(v);
    }
  }
  auto z = primal_index_.find(zero);
  if (z == primal_index_.end()) {
    throw Error(ErrorCode::MissingZeroShift, "primal grid lacks its zero point '" + zero + "'");
  }
  auto dz = dual_index_.find(dual_zero);
  if (dz == dual_index_.end()) {
    throw Error(ErrorCode::MissingZeroShift, "dual grid lacks its zero functional '" + dual_zero + "'");
  }
  zero_ = z->second;
  dual_zero_ = dz->second;
  for (std::size_t i = 0; i < dual_.size(); ++i) {
    if (pair(i, zero_) != 0.0) {
      throw Error(ErrorCode::ValidationError, "pairing of '" + dual_[i] + "' with the zero point is nonzero");
    }
  }
  for (std::size_t j = 0; j < primal_.size(); ++j) {
    if (pair(dual_zero_, j) != 0.0) {
      throw Error(ErrorCode::ValidationError, "zero functional pairs nonzero with '" + primal_[j] + "'");
    }
  }
}

PairedSpace PairedSpace::from_coordinates(const std::vector<std::vector<double>>& primal,
                                          const std::vector<std::vector<double>>& dual,
                                          std::vector<std::string> primal_labels,
                                          std::vector<std::string> dual_labels) {
  auto make_labels = [](const std::vector<std::vector<double>>& pts, std::vector<std::string>& out) {
    if (!out.empty()) {
      if (out.size() != pts.size()) throw Error(ErrorCode::DimensionMismatch, "label count differs from point count");
      return;
    }
    for (const auto& p : pts) out.push_back(coordinate_label(p));
  };
  make_labels(primal, primal_labels);
  make_labels(dual, dual_labels);

  auto find_zero = [](const std::vector<std::vector<double>>& pts, const std::vector<std::string>& labels) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      bool all_zero = true;
      for (double v : pts[i]) all_zero = all_zero && v == 0.0;
      if (all_zero) return labels[i];
    }
    throw Error(ErrorCode::MissingZeroShift, "coordinate grid lacks the origin");
  };

  std::vector<std::vector<double>> table(dual.size(), std::vector<double>(primal.size(), 0.0));
  for (std::size_t i = 0; i < dual.size(); ++i) {
    for (std::size_t j = 0; j < primal.size(); ++j) {
      if (dual[i].size() != primal[j].size()) {
        throw Error(ErrorCode::DimensionMismatch, "primal and dual coordinates differ in length");
      }
      double s = 0.0;
      for (std::size_t k = 0; k < dual[i].size(); ++k) s += dual[i][k] * primal[j][k];
      table[i][j] = s;
    }
  }
  std::string zero = find_zero(primal, primal_labels);
  std::string dual_zero = find_zero(dual, dual_labels);
  return PairedSpace(std::move(primal_labels), std::move(dual_labels), std::move(table), zero, dual_zero);
}

PairedSpace PairedSpace::product(const PairedSpace& a, const PairedSpace& b) {
  auto joint_labels = [](const std::vector<std::string>& la, const std::vector<std::string>& lb) {
    std::vector<std::string> out;
    out.reserve(la.size() * lb.size());
    for (const auto& x : la)
      for (const auto& y : lb) out.push_back("(" + x + "," + y + ")");
    return out;
  };
  std::vector<std::string> primal = joint_labels(a.primal_, b.primal_);
  std::vector<std::string> dual = joint_labels(a.dual_, b.dual_);
  std::vector<std::vector<double>> table(dual.size(), std::vector<double>(primal.size()));
  const std::size_t np = b.primal_size(), nd = b.dual_size();
  for (std::size_t ia = 0; ia < a.dual_size(); ++ia)
    for (std::size_t ib = 0; ib < nd; ++ib)
      for (std::size_t ja = 0; ja < a.primal_size(); ++ja)
        for (std::size_t jb = 0; jb < np; ++jb)
          table[ia * nd + ib][ja * np + jb] = a.pair(ia, ja) + b.pair(ib, jb);
  std::string zero = primal[a.zero_ * np + b.zero_];
  std::string dual_zero = dual[a.dual_zero_ * nd + b.dual_zero_];
  return PairedSpace(std::move(primal), std::move(dual), std::move(table), zero, dual_zero);
}

std::size_t PairedSpace::index(Side s, std::string_view label) const {
  if (auto i = find(s, label)) return *i;
  throw Error(ErrorCode::UnknownPoint, "no point labeled '" + std::string(label) + "' on the " +
                                           (s == Side::Primal ? "primal" : "dual") + " side");
}

std::optional<std::size_t> PairedSpace::find(Side s, std::string_view label) const {
  const auto& idx = s == Side::Primal ? primal_index_ : dual_index_;
  auto it = idx.find(std::string(label));
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<double>> PairedSpace::pairing_table() const {
  std::vector<std::vector<double>> out(dual_.size(), std::vector<double>(primal_.size()));
  for (std::size_t i = 0; i < dual_.size(); ++i)
    for (std::size_t j = 0; j < primal_.size(); ++j) out[i][j] = pair(i, j);
  return out;
}

}  // namespace rdl
