#pragma once

#include "sepball/matrix.hpp"
#include "sepball/norms.hpp"
#include "sepball/profile.hpp"

namespace sepball {

namespace detail {

inline void require_profile_match(const ComplexMatrix& x, const DimensionProfile& profile,
                                  const char* caller) {
  if (x.rows() != x.cols() || x.rows() != profile.total_dim()) {
    throw std::invalid_argument(std::string(caller) +
                                ": matrix side does not match the profile product");
  }
}

}  // namespace detail

/// The (i, j) top-level block of X, of side prod(n2..nm). Indices are 0-based
/// and run over the first subsystem, matching the row-major basis layout.
inline ComplexMatrix top_block(const ComplexMatrix& x, const DimensionProfile& profile,
                               int i, int j) {
  detail::require_profile_match(x, profile, "top_block");
  if (profile.level_count() < 2) {
    throw std::invalid_argument("top_block: profile needs at least two levels");
  }
  const int n1 = profile.dim(0);
  if (i < 0 || i >= n1 || j < 0 || j >= n1) {
    throw std::out_of_range("top_block: block index out of range");
  }
  const int s = profile.inner_dim(1);
  return x.block(static_cast<Eigen::Index>(i) * s, static_cast<Eigen::Index>(j) * s, s, s);
}

/// Recursive block norm on B(n1, ..., nm): replace every top-level block by
/// its own nested norm and take the spectral norm of the resulting n1 x n1
/// nonnegative matrix. A single level is the plain spectral norm.
///
/// The block norms at one level are independent of each other; only the final
/// spectral norm of the norm matrix combines them, so the result does not
/// depend on evaluation order.
inline double nested_norm(const ComplexMatrix& x, const DimensionProfile& profile) {
  detail::require_profile_match(x, profile, "nested_norm");
  if (profile.level_count() == 1) {
    return spectral_norm(x);
  }
  const int n1 = profile.dim(0);
  const int s = profile.inner_dim(1);
  const DimensionProfile inner = profile.tail();
  ComplexMatrix norms(n1, n1);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) {
      norms(i, j) = nested_norm(
          x.block(static_cast<Eigen::Index>(i) * s, static_cast<Eigen::Index>(j) * s, s, s),
          inner);
    }
  }
  return spectral_norm(norms);
}

}  // namespace sepball
