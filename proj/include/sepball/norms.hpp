#pragma once

#include "sepball/matrix.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace sepball {

/// Singular values, descending.
inline RealVector singular_values(const ComplexMatrix& x) {
  Eigen::JacobiSVD<ComplexMatrix> svd(x);
  return svd.singularValues();
}

/// Largest singular value. Rectangular input is allowed; for an n x 1 matrix
/// this is the Euclidean norm of the column.
inline double spectral_norm(const ComplexMatrix& x) {
  return singular_values(x)(0);
}

/// p-norm of the singular value vector; p = 2 is the Frobenius norm and
/// p = infinity the spectral norm.
inline double schatten_norm(const ComplexMatrix& x, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw std::invalid_argument("schatten_norm: order must satisfy p >= 1");
  }
  if (std::isinf(p)) {
    return spectral_norm(x);
  }
  const RealVector sv = singular_values(x);
  if (p == 1.0) {
    return sv.sum();
  }
  if (p == 2.0) {
    return sv.norm();
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    acc += std::pow(sv(i), p);
  }
  return std::pow(acc, 1.0 / p);
}

}  // namespace sepball
