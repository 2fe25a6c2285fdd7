#pragma once

#include "sepball/matrix.hpp"
#include "sepball/profile.hpp"

#include <map>
#include <string>
#include <utility>

namespace sepball {

/// A (possibly unnormalized) Hermitian matrix tagged with its subsystem
/// dimensions. `normalized` marks the trace-1 convention; certifiers lift
/// normalized states to identity scale by multiplying by the total dimension.
/// Positive semidefiniteness is deliberately not a construction invariant —
/// certifiers report INVALID_STATE for non-PSD input instead.
class QuantumState {
 public:
  QuantumState(ComplexMatrix matrix, DimensionProfile profile, bool normalized,
               std::map<std::string, std::string> metadata = {})
      : matrix_(std::move(matrix)),
        profile_(std::move(profile)),
        normalized_(normalized),
        metadata_(std::move(metadata)) {
    if (matrix_.rows() != matrix_.cols()) {
      throw std::invalid_argument("QuantumState: matrix must be square");
    }
    if (matrix_.rows() != profile_.total_dim()) {
      throw std::invalid_argument("QuantumState: matrix side does not match the profile product");
    }
    if (!matrix_.allFinite()) {
      throw std::invalid_argument("QuantumState: matrix entries must be finite");
    }
    if (!is_hermitian(matrix_)) {
      throw std::invalid_argument("QuantumState: matrix is not Hermitian within tolerance");
    }
    if (normalized_ && std::abs(matrix_.trace().real() - 1.0) > 1e-9) {
      throw std::invalid_argument("QuantumState: normalized state must have unit trace");
    }
  }

  const ComplexMatrix& matrix() const { return matrix_; }
  const DimensionProfile& profile() const { return profile_; }
  bool normalized() const { return normalized_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

  double trace() const { return matrix_.trace().real(); }

  /// The matrix at identity scale: normalized states are multiplied by the
  /// total dimension, unnormalized ones pass through.
  ComplexMatrix identity_scale() const {
    if (!normalized_) {
      return matrix_;
    }
    return ComplexMatrix(static_cast<double>(profile_.total_dim()) * matrix_);
  }

  /// Same matrix reinterpreted under different subsystem dimensions.
  QuantumState with_profile(DimensionProfile profile) const {
    return QuantumState(matrix_, std::move(profile), normalized_, metadata_);
  }

  QuantumState with_metadata(std::map<std::string, std::string> metadata) const {
    return QuantumState(matrix_, profile_, normalized_, std::move(metadata));
  }

 private:
  ComplexMatrix matrix_;
  DimensionProfile profile_;
  bool normalized_;
  std::map<std::string, std::string> metadata_;
};

}  // namespace sepball
