#pragma once

#include "sepball/certifiers.hpp"
#include "sepball/eig.hpp"
#include "sepball/norms.hpp"
#include "sepball/report.hpp"

#include <Eigen/LU>

#include <cmath>
#include <limits>

namespace sepball {

/// Matrices (X1, X2, S) generating the block-triangular Gram state
/// rho = X^dag X with X = [[X1, S X1], [0, X2]] on C^2 (x) C^n2.
struct SpptTriple {
  ComplexMatrix x1;
  ComplexMatrix x2;
  ComplexMatrix s;

  int block_dim() const { return static_cast<int>(x1.rows()); }

  void validate() const {
    const Eigen::Index n = x1.rows();
    if (n < 1 || x1.cols() != n || x2.rows() != n || x2.cols() != n || s.rows() != n ||
        s.cols() != n) {
      throw std::invalid_argument("SpptTriple: X1, X2, S must be square and equally sized");
    }
    if (!x1.allFinite() || !x2.allFinite() || !s.allFinite()) {
      throw std::invalid_argument("SpptTriple: entries must be finite");
    }
  }
};

/// Largest admixture of a pure state pi with maximal noise that the nested
/// ball certifies separable: eps <= min_i 1 / (n1 n2 (1 - ||X_i||^2) + 1),
/// where X_i are the n1 consecutive length-n2 chunks of the state vector.
inline double pseudopure_epsilon_bound(const ComplexVector& pi_vector, int n1, int n2) {
  if (n1 < 1 || n2 < 1 || pi_vector.size() != static_cast<Eigen::Index>(n1) * n2) {
    throw std::invalid_argument("pseudopure_epsilon_bound: vector length must equal n1*n2");
  }
  if (std::abs(pi_vector.norm() - 1.0) > 1e-12) {
    throw std::domain_error("pseudopure_epsilon_bound: pi must be a unit vector");
  }
  const double nn = static_cast<double>(n1) * n2;
  double bound = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n1; ++i) {
    const double chunk_sq = pi_vector.segment(static_cast<Eigen::Index>(i) * n2, n2).squaredNorm();
    bound = std::min(bound, 1.0 / (nn * (1.0 - chunk_sq) + 1.0));
  }
  return bound;
}

/// Admixture bound valid for every pure state on C^2 (x) C^n2:
/// eps <= sqrt(3) / (2 n2 + sqrt(3)).
inline double pseudopure_epsilon_bound_2xn(int n2) {
  if (n2 < 1) {
    throw std::invalid_argument("pseudopure_epsilon_bound_2xn: n2 must be positive");
  }
  const double s3 = std::sqrt(3.0);
  return s3 / (2.0 * n2 + s3);
}

/// The Gurvits-Barnum comparator bound eps <= 1 / sqrt(n1 n2 (n1 n2 - 1)).
inline double gurvits_barnum_epsilon(int n1, int n2) {
  if (n1 < 1 || n2 < 1 || n1 * n2 < 2) {
    throw std::domain_error("gurvits_barnum_epsilon: need n1*n2 >= 2");
  }
  const double nn = static_cast<double>(n1) * n2;
  return 1.0 / std::sqrt(nn * (nn - 1.0));
}

/// Strong-PPT test for the triple: X1^dag S^dag S X1 == X1^dag S S^dag X1.
inline bool is_sppt(const SpptTriple& triple, double tol = kDefaultCertifierTol) {
  triple.validate();
  const ComplexMatrix lhs = triple.x1.adjoint() * triple.s.adjoint() * triple.s * triple.x1;
  const ComplexMatrix rhs = triple.x1.adjoint() * triple.s * triple.s.adjoint() * triple.x1;
  const double scale = std::max(1.0, triple.x1.squaredNorm() * triple.s.squaredNorm());
  return (lhs - rhs).norm() <= tol * scale;
}

/// Certifies rho = X^dag X separable when X2^dag X2 - X1^dag X1 is PSD and
/// the squared singular-value spread of S is at most 1. Works for singular X1.
inline CertificateReport certify_sppt_block_dominance(const SpptTriple& triple,
                                                      double tol = kDefaultCertifierTol) {
  triple.validate();
  const RealVector sv = singular_values(triple.s);
  const double sigma_max = sv(0);
  const double sigma_min = sv(sv.size() - 1);
  ComplexMatrix gap = triple.x2.adjoint() * triple.x2 - triple.x1.adjoint() * triple.x1;
  gap = 0.5 * (gap + gap.adjoint());
  const RealVector gap_ev = hermitian_eigenvalues(gap);
  const double gap_scale = std::max(std::abs(gap_ev(0)), std::abs(gap_ev(gap_ev.size() - 1)));
  const bool gap_psd = gap_ev(0) >= -tol * std::max(1.0, gap_scale);

  CertificateReport report;
  report.certifier = "sppt-block-dominance";
  report.norm_value = sigma_max * sigma_max - sigma_min * sigma_min;
  report.radius = 1.0;
  report.psd_ok = true;  // rho = X^dag X is a Gram matrix
  report.metrics["sigma_min"] = sigma_min;
  report.metrics["sigma_max"] = sigma_max;
  report.metrics["gram_gap_min_eigenvalue"] = gap_ev(0);
  const bool spread_ok = report.norm_value <= 1.0 + tol;
  if (gap_psd) {
    report.satisfied_conditions.push_back("gram-gap-psd");
  }
  if (spread_ok) {
    report.satisfied_conditions.push_back("sigma-spread");
  }
  report.verdict =
      (gap_psd && spread_ok) ? Verdict::CertifiedSeparable : Verdict::Inconclusive;
  return report;
}

/// Certifies rho = X^dag X separable from the eigenvalue window of
/// R = S^dag S + X1^{-dag} X2^dag X2 X1^{-1} against sigma_max(S). Requires
/// nonsingular X1. One of three windows must admit sigma_max^2:
///   (i)   eta_min >= sigma_max^2 with eta_max >= 1,
///   (ii)  eta_max <= 1 with eta_min (2 eta_max - 1) >= sigma_max^2,
///   (iii) 1 >= eta_min >= (1 + eta_max)/4 with
///         (2 eta_min - 1)(2 eta_min - eta_max) >= sigma_max^2.
/// The report lists every satisfied window, not just the first.
inline CertificateReport certify_sppt_eigenvalue_window(const SpptTriple& triple,
                                                        double tol = kDefaultCertifierTol) {
  triple.validate();
  const RealVector x1_sv = singular_values(triple.x1);
  if (!(x1_sv(x1_sv.size() - 1) > 1e-12 * x1_sv(0))) {
    throw std::domain_error(
        "certify_sppt_eigenvalue_window: X1 is numerically singular; "
        "use certify_sppt_block_dominance instead");
  }
  const int n = triple.block_dim();
  const ComplexMatrix x1_inv = triple.x1.partialPivLu().solve(ComplexMatrix::Identity(n, n));
  const ComplexMatrix k = triple.x2 * x1_inv;
  ComplexMatrix r = triple.s.adjoint() * triple.s + k.adjoint() * k;
  r = 0.5 * (r + r.adjoint());
  const RealVector eta = hermitian_eigenvalues(r);
  const double eta_min = eta(0);
  const double eta_max = eta(eta.size() - 1);
  const double sigma_max = spectral_norm(triple.s);
  const double s2 = sigma_max * sigma_max;
  const double slack = tol * std::max({1.0, std::abs(eta_max), s2});

  CertificateReport report;
  report.certifier = "sppt-eigenvalue-window";
  report.psd_ok = true;
  report.metrics["eta_min"] = eta_min;
  report.metrics["eta_max"] = eta_max;
  report.metrics["sigma_max"] = sigma_max;

  const bool cond_i = eta_min >= s2 - slack && eta_max >= 1.0 - slack;
  const bool cond_ii = eta_max <= 1.0 + slack && eta_min * (2.0 * eta_max - 1.0) >= s2 - slack;
  const bool cond_iii = eta_min <= 1.0 + slack &&
                        eta_min >= 0.25 * (1.0 + eta_max) - slack &&
                        (2.0 * eta_min - 1.0) * (2.0 * eta_min - eta_max) >= s2 - slack;
  if (cond_i) report.satisfied_conditions.push_back("i");
  if (cond_ii) report.satisfied_conditions.push_back("ii");
  if (cond_iii) report.satisfied_conditions.push_back("iii");

  // norm/radius view: sigma_max^2 against the best budget granted by whichever
  // eta-window prerequisites hold. At least one of the first two always does.
  double budget = -std::numeric_limits<double>::infinity();
  if (eta_max >= 1.0 - slack) {
    budget = std::max(budget, eta_min);
  }
  if (eta_max <= 1.0 + slack) {
    budget = std::max(budget, eta_min * (2.0 * eta_max - 1.0));
  }
  if (eta_min <= 1.0 + slack && eta_min >= 0.25 * (1.0 + eta_max) - slack) {
    budget = std::max(budget, (2.0 * eta_min - 1.0) * (2.0 * eta_min - eta_max));
  }
  report.norm_value = s2;
  report.radius = budget;
  report.verdict = (cond_i || cond_ii || cond_iii) ? Verdict::CertifiedSeparable
                                                   : Verdict::Inconclusive;
  return report;
}

}  // namespace sepball
