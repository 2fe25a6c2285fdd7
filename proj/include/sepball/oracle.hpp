#pragma once

#include "sepball/eig.hpp"
#include "sepball/profile.hpp"
#include "sepball/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sepball {

struct PptReport {
  double min_pt_eigenvalue = 0.0;
  bool is_ppt = false;
  int subsystem_transposed = 2;
};

/// Transpose of the second subsystem: every n2 x n2 block is replaced by its
/// plain transpose. Hermitian input gives Hermitian output.
inline ComplexMatrix partial_transpose(const QuantumState& state) {
  const DimensionProfile& profile = state.profile();
  if (!profile.bipartite()) {
    throw std::domain_error("partial_transpose: bipartite states only");
  }
  const int n1 = profile.dim(0);
  const int n2 = profile.dim(1);
  const ComplexMatrix& rho = state.matrix();
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) {
      out.block(static_cast<Eigen::Index>(i) * n2, static_cast<Eigen::Index>(j) * n2, n2, n2) =
          rho.block(static_cast<Eigen::Index>(i) * n2, static_cast<Eigen::Index>(j) * n2, n2, n2)
              .transpose();
    }
  }
  return out;
}

inline PptReport ppt_check(const QuantumState& state, double tol = 1e-9) {
  const RealVector ev = hermitian_eigenvalues(partial_transpose(state));
  const double spectral = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  PptReport report;
  report.min_pt_eigenvalue = ev(0);
  report.is_ppt = ev(0) >= -tol * std::max(1.0, spectral);
  return report;
}

/// Exact separability decision where the positive-partial-transpose test is
/// necessary and sufficient (bipartite, total dimension <= 6).
inline bool separability_decide_low_dim(const QuantumState& state, double tol = 1e-9) {
  const DimensionProfile& profile = state.profile();
  if (!profile.bipartite() || profile.total_dim() > 6) {
    throw std::domain_error("separability_decide_low_dim: exact decision only up to 2x3");
  }
  return ppt_check(state, tol).is_ppt;
}

// ---------------------------------------------------------------------------
// Independent recomputation of the nested norm. Every eigenvalue below comes
// from a closed-form characteristic polynomial (n <= 3) or inertia-counting
// bisection (n > 3); none of the solver-backed decompositions used by the main
// norm path are touched, so agreement between the two is a meaningful
// cross-check rather than the same code run twice.

namespace oracle_detail {

inline double max_eig_2x2(const ComplexMatrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double mean = 0.5 * (a + d);
  return mean + std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
}

inline double det_3x3_hermitian(const ComplexMatrix& h) {
  const double d0 = h(0, 0).real();
  const double d1 = h(1, 1).real();
  const double d2 = h(2, 2).real();
  const Complex h01 = h(0, 1);
  const Complex h02 = h(0, 2);
  const Complex h12 = h(1, 2);
  return d0 * d1 * d2 - d0 * std::norm(h12) - d1 * std::norm(h02) - d2 * std::norm(h01) +
         2.0 * std::real(h01 * h12 * std::conj(h02));
}

inline double max_eig_3x3(const ComplexMatrix& h) {
  const double d0 = h(0, 0).real();
  const double d1 = h(1, 1).real();
  const double d2 = h(2, 2).real();
  const double p1 = std::norm(h(0, 1)) + std::norm(h(0, 2)) + std::norm(h(1, 2));
  const double q = (d0 + d1 + d2) / 3.0;
  const double p2 = (d0 - q) * (d0 - q) + (d1 - q) * (d1 - q) + (d2 - q) * (d2 - q) + 2.0 * p1;
  if (p2 <= 0.0) {
    return q;
  }
  const double p = std::sqrt(p2 / 6.0);
  ComplexMatrix b = (h - q * ComplexMatrix::Identity(3, 3)) / p;
  double r = 0.5 * det_3x3_hermitian(b);
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  double lam = q + 2.0 * p * std::cos(phi);
  // Newton polish on the characteristic polynomial
  const double c2 = d0 + d1 + d2;
  const double c1 = d0 * d1 + d0 * d2 + d1 * d2 - p1;
  const double c0 = det_3x3_hermitian(h);
  for (int it = 0; it < 2; ++it) {
    const double f = ((lam - c2) * lam + c1) * lam - c0;
    const double df = (3.0 * lam - 2.0 * c2) * lam + c1;
    if (df == 0.0) {
      break;
    }
    const double step = f / df;
    if (!(std::abs(step) < 0.5 * p)) {
      break;
    }
    lam -= step;
  }
  return lam;
}

/// Number of eigenvalues of h strictly below `shift`, by Sylvester inertia of
/// the LDL^dag factorization of h - shift I. Fails (ok = false) when a pivot
/// lands too close to zero; the caller retries with a jittered shift.
inline int eigenvalues_below_attempt(ComplexMatrix a, double shift, double pivot_floor,
                                     bool& ok) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    a(k, k) -= shift;
  }
  int count = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double d = a(k, k).real();
    if (std::abs(d) < pivot_floor) {
      ok = false;
      return 0;
    }
    if (d < 0.0) {
      ++count;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Complex ratio = a(i, k) / d;
      for (Eigen::Index j = k + 1; j <= i; ++j) {
        a(i, j) -= ratio * std::conj(a(j, k));
      }
    }
  }
  ok = true;
  return count;
}

inline int eigenvalues_below(const ComplexMatrix& h, double shift) {
  const double scale = std::max({1.0, h.cwiseAbs().maxCoeff(), std::abs(shift)});
  const double pivot_floor = 1e-2 * std::numeric_limits<double>::epsilon() * scale;
  for (int attempt = 0; attempt < 8; ++attempt) {
    bool ok = false;
    const double jitter =
        attempt * attempt * 8.0 * std::numeric_limits<double>::epsilon() * scale;
    const int count = eigenvalues_below_attempt(h, shift + jitter, pivot_floor, ok);
    if (ok) {
      return count;
    }
  }
  throw std::runtime_error("eigenvalues_below: factorization kept hitting zero pivots");
}

inline double max_eig_bisect(const ComplexMatrix& h) {
  const Eigen::Index n = h.rows();
  double lo = -std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double center = h(i, i).real();
    double radius = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i) {
        radius += std::abs(h(i, j));
      }
    }
    lo = std::max(lo, center);  // diagonal entries are Rayleigh quotients
    hi = std::max(hi, center + radius);
  }
  if (!(hi > lo)) {
    return lo;
  }
  const double span = std::max({1.0, std::abs(lo), std::abs(hi)});
  for (int it = 0; it < 200 && hi - lo > 1e-14 * span; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (eigenvalues_below(h, mid) == n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double max_eig_hermitian(const ComplexMatrix& h) {
  switch (h.rows()) {
    case 1: return h(0, 0).real();
    case 2: return max_eig_2x2(h);
    case 3: return max_eig_3x3(h);
    default: return max_eig_bisect(h);
  }
}

inline double spectral_norm_indep(const ComplexMatrix& x) {
  ComplexMatrix gram = (x.cols() <= x.rows()) ? ComplexMatrix(x.adjoint() * x)
                                              : ComplexMatrix(x * x.adjoint());
  gram = 0.5 * (gram + gram.adjoint());
  return std::sqrt(std::max(0.0, max_eig_hermitian(gram)));
}

}  // namespace oracle_detail

/// Recomputes the nested norm through the independent eigenvalue path above.
inline double nested_norm_bruteforce(const ComplexMatrix& x, const DimensionProfile& profile) {
  if (x.rows() != x.cols() || x.rows() != profile.total_dim()) {
    throw std::invalid_argument(
        "nested_norm_bruteforce: matrix side does not match the profile product");
  }
  if (profile.level_count() == 1) {
    return oracle_detail::spectral_norm_indep(x);
  }
  const int n1 = profile.dim(0);
  const int s = profile.inner_dim(1);
  const DimensionProfile inner = profile.tail();
  ComplexMatrix norms(n1, n1);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) {
      norms(i, j) = nested_norm_bruteforce(
          x.block(static_cast<Eigen::Index>(i) * s, static_cast<Eigen::Index>(j) * s, s, s),
          inner);
    }
  }
  return oracle_detail::spectral_norm_indep(norms);
}

}  // namespace sepball
