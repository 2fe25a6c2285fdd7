#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepball {

/// Ordered subsystem dimensions (n1, ..., nm). Fixes both the tensor factor
/// layout (first factor outermost, basis |i j ...> at row-major index) and the
/// nested block structure used by the block norm.
class DimensionProfile {
 public:
  explicit DimensionProfile(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
      throw std::invalid_argument("DimensionProfile: at least one subsystem required");
    }
    for (int d : dims_) {
      if (d < 1) {
        throw std::invalid_argument("DimensionProfile: dimensions must be positive");
      }
    }
  }

  DimensionProfile(std::initializer_list<int> dims)
      : DimensionProfile(std::vector<int>(dims)) {}

  int level_count() const { return static_cast<int>(dims_.size()); }
  int dim(int level) const { return dims_.at(static_cast<std::size_t>(level)); }
  const std::vector<int>& dims() const { return dims_; }

  /// Product of all dimensions: the side length of a matching matrix.
  int total_dim() const { return product_from(0); }

  /// Product of dims[level..m): the block side below `level`.
  int inner_dim(int level) const { return product_from(level); }

  /// Profile of the levels below the top one.
  DimensionProfile tail() const {
    if (dims_.size() < 2) {
      throw std::logic_error("DimensionProfile::tail: single-level profile has no tail");
    }
    return DimensionProfile(std::vector<int>(dims_.begin() + 1, dims_.end()));
  }

  bool bipartite() const { return dims_.size() == 2; }

  bool all_qubits() const {
    for (int d : dims_) {
      if (d != 2) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i) out << ',';
      out << dims_[i];
    }
    return out.str();
  }

  friend bool operator==(const DimensionProfile&, const DimensionProfile&) = default;

 private:
  int product_from(int level) const {
    long long p = 1;
    for (std::size_t i = static_cast<std::size_t>(level); i < dims_.size(); ++i) {
      p *= dims_[i];
      if (p > (1 << 24)) {
        throw std::invalid_argument("DimensionProfile: total dimension is too large");
      }
    }
    return static_cast<int>(p);
  }

  std::vector<int> dims_;
};

}  // namespace sepball
