#pragma once

#include "sepball/eig.hpp"
#include "sepball/nested_norm.hpp"
#include "sepball/report.hpp"
#include "sepball/state.hpp"

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace sepball {

inline constexpr double kDefaultCertifierTol = 1e-9;

namespace detail {

/// Ball radius for an m-subsystem nested ball: 1 for bipartite, halving with
/// every additional subsystem.
inline double nested_ball_radius(int levels) {
  return std::ldexp(1.0, 2 - levels);
}

struct PsdProbe {
  bool ok;
  double min_eigenvalue;
};

inline PsdProbe probe_psd(const QuantumState& state, double tol) {
  const RealVector ev = hermitian_eigenvalues(state.matrix());
  const double spectral = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  return {ev(0) >= -tol * std::max(1.0, spectral), ev(0)};
}

inline ComplexMatrix centered(const ComplexMatrix& rho) {
  return rho - ComplexMatrix::Identity(rho.rows(), rho.cols());
}

inline CertificateReport finish_ball_report(std::string name, const QuantumState& state,
                                            double norm_value, double radius, double tol) {
  CertificateReport report;
  report.certifier = std::move(name);
  report.norm_value = norm_value;
  report.radius = radius;
  const PsdProbe psd = probe_psd(state, tol);
  report.psd_ok = psd.ok;
  report.metrics["state_min_eigenvalue"] = psd.min_eigenvalue;
  if (!psd.ok) {
    report.verdict = Verdict::InvalidState;
  } else if (norm_value <= radius + tol * std::max(1.0, radius)) {
    // closed ball: exact equality certifies
    report.verdict = Verdict::CertifiedSeparable;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

}  // namespace detail

/// Nested-ball membership: ||rho_scaled - I||_{n1,...,nm} <= 2^(2-m).
inline CertificateReport certify_nested_ball(const QuantumState& state,
                                             double tol = kDefaultCertifierTol) {
  if (state.profile().level_count() < 2) {
    throw std::domain_error("certify_nested_ball: need at least two subsystems");
  }
  const ComplexMatrix rho = state.identity_scale();
  const double t = nested_norm(detail::centered(rho), state.profile());
  const double r = detail::nested_ball_radius(state.profile().level_count());
  return detail::finish_ball_report("nested", state, t, r, tol);
}

/// Scaled nested ball: searches a > 0 with ||rho_scaled - a I|| <= a r, which
/// certifies along the whole ray through rho. g(a) = ||rho - a I|| - a r is
/// convex in a (a norm of an affine matrix function minus an affine term), so
/// a ternary search on the bracket finds the minimum. The bracket always
/// contains a = 1 so the scaled ball never loses to the direct one.
inline CertificateReport certify_nested_ball_scaled(const QuantumState& state,
                                                    double tol = kDefaultCertifierTol,
                                                    bool extend_multipartite = false) {
  const DimensionProfile& profile = state.profile();
  const int m = profile.level_count();
  if (m < 2) {
    throw std::domain_error("certify_nested_ball_scaled: need at least two subsystems");
  }
  if (m != 2 && !extend_multipartite) {
    throw std::domain_error(
        "certify_nested_ball_scaled: bipartite states only "
        "(set extend_multipartite to opt in for m > 2)");
  }
  const ComplexMatrix rho = state.identity_scale();
  const Eigen::Index n = rho.rows();
  const double r = detail::nested_ball_radius(m);
  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  auto g = [&](double a) { return nested_norm(rho - a * eye, profile) - a * r; };

  const double rho_norm = spectral_norm(rho);
  double lo = std::max(1e-12, std::min(1e-6 * rho.trace().real() / static_cast<double>(n), 1.0));
  double hi = std::max(2.0 * rho_norm, 1.0);
  while (hi - lo > 1e-10) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (g(m1) <= g(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  double a = 0.5 * (lo + hi);
  if (g(1.0) < g(a)) {
    a = 1.0;
  }

  const double norm_at_a = nested_norm(rho - a * eye, profile);
  CertificateReport report;
  report.certifier = "nested-scaled";
  report.norm_value = norm_at_a;
  report.radius = a * r;
  report.scaling_factor = a;
  report.metrics["scaled_gap"] = norm_at_a - a * r;
  const detail::PsdProbe psd = detail::probe_psd(state, tol);
  report.psd_ok = psd.ok;
  report.metrics["state_min_eigenvalue"] = psd.min_eigenvalue;
  if (!psd.ok) {
    report.verdict = Verdict::InvalidState;
  } else if (norm_at_a - a * r <= tol * std::max(1.0, rho_norm)) {
    report.verdict = Verdict::CertifiedSeparable;
  } else {
    report.verdict = Verdict::Inconclusive;
  }
  return report;
}

/// Frobenius ball ||rho_scaled - I||_2 <= 1 (the Gurvits ball).
inline CertificateReport certify_frobenius_ball(const QuantumState& state,
                                                double tol = kDefaultCertifierTol) {
  if (!state.profile().bipartite()) {
    throw std::domain_error("certify_frobenius_ball: bipartite states only");
  }
  const double t = schatten_norm(detail::centered(state.identity_scale()), 2.0);
  return detail::finish_ball_report("frobenius", state, t, 1.0, tol);
}

/// Spectral ball ||rho_scaled - I||_inf <= 1/n1; a spectrum-only condition.
inline CertificateReport certify_spectral_ball(const QuantumState& state,
                                               double tol = kDefaultCertifierTol) {
  if (!state.profile().bipartite()) {
    throw std::domain_error("certify_spectral_ball: bipartite states only");
  }
  const double t = spectral_norm(detail::centered(state.identity_scale()));
  const double r = 1.0 / static_cast<double>(state.profile().dim(0));
  return detail::finish_ball_report("spectral", state, t, r, tol);
}

/// Multiqubit Frobenius ball ||rho_scaled - I||_2 <= sqrt(54/17) 6^(-m/2) 2^m
/// (the Hildebrand radius).
inline CertificateReport certify_hildebrand_ball(const QuantumState& state,
                                                 double tol = kDefaultCertifierTol) {
  const DimensionProfile& profile = state.profile();
  if (!profile.all_qubits() || profile.level_count() < 2) {
    throw std::domain_error("certify_hildebrand_ball: multiqubit profiles only");
  }
  const int m = profile.level_count();
  const double radius = std::sqrt(54.0 / 17.0) * std::pow(6.0, -0.5 * m) * std::pow(2.0, m);
  const double t = schatten_norm(detail::centered(state.identity_scale()), 2.0);
  return detail::finish_ball_report("hildebrand", state, t, radius, tol);
}

struct ScanProbe {
  double parameter;
  bool certified;
};

/// Bisection on the certifier verdict along [lo, hi]; the verdict must flip at
/// most once on the range. If the certifier fires at both endpoints the whole
/// range is certified and hi is returned; if it fires at neither, there is no
/// boundary to find and the scan fails.
inline double threshold_scan(const std::function<QuantumState(double)>& family,
                             const std::function<CertificateReport(const QuantumState&)>& certifier,
                             double lo, double hi, double tol,
                             std::vector<ScanProbe>* probe_log = nullptr) {
  if (!(lo < hi)) {
    throw std::invalid_argument("threshold_scan: need lo < hi");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("threshold_scan: tolerance must be positive");
  }
  auto probe = [&](double p) {
    const bool c = certifier(family(p)).certified();
    if (probe_log) {
      probe_log->push_back({p, c});
    }
    return c;
  };
  const bool at_lo = probe(lo);
  const bool at_hi = probe(hi);
  if (at_lo == at_hi) {
    if (at_lo) {
      return hi;
    }
    throw std::runtime_error("threshold_scan: certifier fires at neither endpoint");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (probe(mid) == at_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace sepball
