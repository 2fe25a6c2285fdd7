#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <utility>

namespace sepball {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Acceptance policy for nearly-Hermitian input: absolute tolerance scaled by
/// the magnitude of the matrix, so serialization round-trip noise on large
/// entries is not rejected.
struct HermitianCheckPolicy {
  double tolerance = 1e-9;
};

inline ComplexMatrix dagger(const ComplexMatrix& x) {
  return x.adjoint();
}

inline bool is_hermitian(const ComplexMatrix& x, const HermitianCheckPolicy& policy = {}) {
  if (x.rows() != x.cols()) {
    return false;
  }
  const double scale = std::max(1.0, x.norm());
  return (x - x.adjoint()).norm() <= policy.tolerance * scale;
}

/// X = H + S with H = (X + X^dag)/2 Hermitian and S = (X - X^dag)/2 skew-Hermitian.
inline std::pair<ComplexMatrix, ComplexMatrix> hermitian_skew_split(const ComplexMatrix& x) {
  if (x.rows() != x.cols()) {
    throw std::invalid_argument("hermitian_skew_split: matrix must be square");
  }
  return {0.5 * (x + x.adjoint()), 0.5 * (x - x.adjoint())};
}

/// Kronecker product with the first factor outermost:
/// (A (x) B)(i*rows_B + k, j*cols_B + l) = A(i, j) * B(k, l).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace sepball
