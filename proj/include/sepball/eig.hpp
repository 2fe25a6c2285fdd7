#pragma once

#include "sepball/matrix.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <string>

namespace sepball {

struct HermitianEigensystem {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // orthonormal columns, matching order
};

namespace detail {

inline void require_hermitian(const ComplexMatrix& x, const HermitianCheckPolicy& policy,
                              const char* caller) {
  if (!is_hermitian(x, policy)) {
    throw std::domain_error(std::string(caller) + ": matrix is not Hermitian within tolerance");
  }
}

}  // namespace detail

inline RealVector hermitian_eigenvalues(const ComplexMatrix& x,
                                        const HermitianCheckPolicy& policy = {}) {
  detail::require_hermitian(x, policy, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(x, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  return solver.eigenvalues();
}

inline HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& x,
                                                  const HermitianCheckPolicy& policy = {}) {
  detail::require_hermitian(x, policy, "hermitian_eigensystem");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(x);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigensystem: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline double min_eigenvalue_hermitian(const ComplexMatrix& x,
                                       const HermitianCheckPolicy& policy = {}) {
  return hermitian_eigenvalues(x, policy).minCoeff();
}

/// PSD test with slack scaled by the spectral magnitude of X.
inline bool is_psd(const ComplexMatrix& x, double tol = 1e-9,
                   const HermitianCheckPolicy& policy = {}) {
  const RealVector ev = hermitian_eigenvalues(x, policy);
  const double spectral = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  return ev(0) >= -tol * std::max(1.0, spectral);
}

}  // namespace sepball
