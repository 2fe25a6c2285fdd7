#pragma once

#include "sepball/matrix.hpp"
#include "sepball/nested_norm.hpp"
#include "sepball/state.hpp"

#include <random>

namespace test_helpers {

using sepball::Complex;
using sepball::ComplexMatrix;
using sepball::ComplexVector;

inline ComplexMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::normal_distribution<double> gauss;
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937& rng, int n) {
  const ComplexMatrix x = random_matrix(rng, n, n);
  return 0.5 * (x + x.adjoint());
}

inline ComplexVector random_unit_vector(std::mt19937& rng, int n) {
  std::normal_distribution<double> gauss;
  ComplexVector v(n);
  for (int i = 0; i < n; ++i) {
    v(i) = Complex(gauss(rng), gauss(rng));
  }
  v /= v.norm();
  return v;
}

/// Normalized state I/n + perturbation whose identity-scale nested distance is
/// `distance`; distance <= 1 lands inside the bipartite nested ball.
inline sepball::QuantumState perturbed_mixed_state(std::mt19937& rng,
                                                   const sepball::DimensionProfile& profile,
                                                   double distance) {
  const int n = profile.total_dim();
  ComplexMatrix h = random_hermitian(rng, n);
  h -= (h.trace() / static_cast<double>(n)) * ComplexMatrix::Identity(n, n);
  const double scale = sepball::nested_norm(h, profile);
  ComplexMatrix rho = ComplexMatrix::Identity(n, n);
  if (scale > 0.0) {
    rho += (distance / scale) * h;
  }
  rho /= static_cast<double>(n);
  return sepball::QuantumState(rho, profile, true);
}

}  // namespace test_helpers
