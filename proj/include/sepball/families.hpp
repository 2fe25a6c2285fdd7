#pragma once

#include "sepball/matrix.hpp"
#include "sepball/state.hpp"
#include "sepball/structured.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <string>

namespace sepball {

namespace detail {

inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline QuantumState maximally_mixed(const DimensionProfile& profile) {
  const int n = profile.total_dim();
  return QuantumState(ComplexMatrix::Identity(n, n) / static_cast<double>(n), profile, true,
                      {{"family", "maximally-mixed"}});
}

/// The flip operator sum_{i,j} |ij><ji| on C^d (x) C^d. Hermitian, squares to
/// the identity, trace d.
inline ComplexMatrix swap_operator(int d) {
  if (d < 1) {
    throw std::invalid_argument("swap_operator: d must be positive");
  }
  ComplexMatrix eta = ComplexMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      eta(i * d + j, j * d + i) = 1.0;
    }
  }
  return eta;
}

/// Werner state ((d - b) I + (d b - 1) eta) / (d^3 - d), separable exactly for
/// 0 <= b <= 1.
inline QuantumState werner(int d, double b) {
  if (d < 2) {
    throw std::invalid_argument("werner: d must be at least 2");
  }
  if (!(b >= -1.0 && b <= 1.0)) {
    throw std::invalid_argument("werner: b must lie in [-1, 1]");
  }
  const int n = d * d;
  const double denom = static_cast<double>(d) * d * d - d;
  const ComplexMatrix rho =
      ((static_cast<double>(d) - b) * ComplexMatrix::Identity(n, n) +
       (d * b - 1.0) * swap_operator(d)) /
      denom;
  return QuantumState(rho, DimensionProfile({d, d}), true,
                      {{"family", "werner"},
                       {"d", std::to_string(d)},
                       {"b", detail::format_real(b)}});
}

/// Isotropic state eps |Phi+><Phi+| + (1 - eps) I / d^2 with
/// |Phi+> = sum_i |ii> / sqrt(d); the pseudopure family at maximally
/// entangled pi.
inline QuantumState isotropic(int d, double epsilon) {
  if (d < 2) {
    throw std::invalid_argument("isotropic: d must be at least 2");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("isotropic: epsilon must lie in [0, 1]");
  }
  const int n = d * d;
  ComplexVector phi = ComplexVector::Zero(n);
  for (int i = 0; i < d; ++i) {
    phi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  }
  ComplexMatrix rho = epsilon * (phi * phi.adjoint()) +
                      ((1.0 - epsilon) / n) * ComplexMatrix::Identity(n, n);
  rho = 0.5 * (rho + rho.adjoint());
  return QuantumState(rho, DimensionProfile({d, d}), true,
                      {{"family", "isotropic"},
                       {"d", std::to_string(d)},
                       {"eps", detail::format_real(epsilon)}});
}

/// The 3 (x) 3 bound entangled state with parameter 0 < a < 1: PPT for every a
/// yet entangled, so no ball certifier may ever fire on it.
inline QuantumState horodecki_3x3(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw std::invalid_argument("horodecki_3x3: a must lie in (0, 1)");
  }
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  for (int i = 0; i < 9; ++i) {
    m(i, i) = a;
  }
  m(6, 6) = 0.5 * (1.0 + a);
  m(8, 8) = 0.5 * (1.0 + a);
  m(0, 4) = m(4, 0) = a;
  m(0, 8) = m(8, 0) = a;
  m(4, 8) = m(8, 4) = a;
  m(6, 8) = m(8, 6) = 0.5 * std::sqrt(1.0 - a * a);
  const ComplexMatrix rho = m / (8.0 * a + 1.0);
  return QuantumState(rho, DimensionProfile({3, 3}), true,
                      {{"family", "horodecki"}, {"a", detail::format_real(a)}});
}

/// Mixture p * horodecki_3x3(a) + (1 - p) I / 9.
inline QuantumState horodecki_mix(double a, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("horodecki_mix: p must lie in [0, 1]");
  }
  const QuantumState base = horodecki_3x3(a);
  const ComplexMatrix rho =
      p * base.matrix() + ((1.0 - p) / 9.0) * ComplexMatrix::Identity(9, 9);
  return QuantumState(rho, DimensionProfile({3, 3}), true,
                      {{"family", "horodecki-mix"},
                       {"a", detail::format_real(a)},
                       {"p", detail::format_real(p)}});
}

struct PseudopureSpec {
  ComplexVector pi_vector;  // unit vector of length n1*n2
  double epsilon = 0.0;
  int n1 = 0;
  int n2 = 0;
};

/// Pseudopure state eps pi + (1 - eps) I / (n1 n2) with pi = v v^dag.
inline QuantumState pseudopure(const PseudopureSpec& spec) {
  if (spec.n1 < 1 || spec.n2 < 1 ||
      spec.pi_vector.size() != static_cast<Eigen::Index>(spec.n1) * spec.n2) {
    throw std::invalid_argument("pseudopure: vector length must equal n1*n2");
  }
  if (std::abs(spec.pi_vector.norm() - 1.0) > 1e-12) {
    throw std::domain_error("pseudopure: pi must be a unit vector");
  }
  if (!(spec.epsilon >= 0.0 && spec.epsilon <= 1.0)) {
    throw std::invalid_argument("pseudopure: epsilon must lie in [0, 1]");
  }
  const int n = spec.n1 * spec.n2;
  ComplexMatrix rho = spec.epsilon * (spec.pi_vector * spec.pi_vector.adjoint()) +
                      ((1.0 - spec.epsilon) / n) * ComplexMatrix::Identity(n, n);
  rho = 0.5 * (rho + rho.adjoint());
  return QuantumState(rho, DimensionProfile({spec.n1, spec.n2}), true,
                      {{"family", "pseudopure"},
                       {"n1", std::to_string(spec.n1)},
                       {"n2", std::to_string(spec.n2)},
                       {"eps", detail::format_real(spec.epsilon)}});
}

/// Unnormalized Gram state rho = X^dag X from the block-triangular
/// X = [[X1, S X1], [0, X2]], on profile (2, n2). PSD by construction.
inline QuantumState sppt_state(const SpptTriple& triple) {
  triple.validate();
  const int n = triple.block_dim();
  ComplexMatrix x = ComplexMatrix::Zero(2 * n, 2 * n);
  x.block(0, 0, n, n) = triple.x1;
  x.block(0, n, n, n) = triple.s * triple.x1;
  x.block(n, n, n, n) = triple.x2;
  ComplexMatrix rho = x.adjoint() * x;
  rho = 0.5 * (rho + rho.adjoint());
  return QuantumState(rho, DimensionProfile({2, n}), false, {{"family", "sppt"}});
}

struct CirculantParams {
  double a11 = 0.0;
  double a22 = 0.0;
  double b11 = 0.0;
  double b22 = 0.0;
  Complex a12{0.0, 0.0};
  Complex b12{0.0, 0.0};
};

namespace detail {

inline void require_circulant_block_psd(double d1, double d2, Complex off, const char* name) {
  if (d1 < -1e-12 || d2 < -1e-12 || d1 * d2 - std::norm(off) < -1e-9) {
    throw std::invalid_argument(std::string("circulant_2x2: ") + name +
                                " block is not positive semidefinite");
  }
}

}  // namespace detail

/// Normalized circulant state on C^2 (x) C^2: the a-block lives on
/// span{|00>,|11>} and the b-block on span{|01>,|10>}. Metadata carries an
/// "sppt" flag, true exactly when |a12| = |b12|.
inline QuantumState circulant_2x2(const CirculantParams& cp) {
  detail::require_circulant_block_psd(cp.a11, cp.a22, cp.a12, "a");
  detail::require_circulant_block_psd(cp.b11, cp.b22, cp.b12, "b");
  if (std::abs(cp.a11 + cp.a22 + cp.b11 + cp.b22 - 1.0) > 1e-9) {
    throw std::invalid_argument("circulant_2x2: trace must be 1");
  }
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = cp.a11;
  rho(0, 3) = cp.a12;
  rho(3, 0) = std::conj(cp.a12);
  rho(3, 3) = cp.a22;
  rho(1, 1) = cp.b11;
  rho(1, 2) = cp.b12;
  rho(2, 1) = std::conj(cp.b12);
  rho(2, 2) = cp.b22;
  const bool sppt =
      std::abs(std::abs(cp.a12) - std::abs(cp.b12)) <=
      1e-9 * std::max(1.0, std::abs(cp.a12) + std::abs(cp.b12));
  return QuantumState(rho, DimensionProfile({2, 2}), true,
                      {{"family", "circulant"},
                       {"a11", detail::format_real(cp.a11)},
                       {"a22", detail::format_real(cp.a22)},
                       {"b11", detail::format_real(cp.b11)},
                       {"b22", detail::format_real(cp.b22)},
                       {"a12_re", detail::format_real(cp.a12.real())},
                       {"a12_im", detail::format_real(cp.a12.imag())},
                       {"b12_re", detail::format_real(cp.b12.real())},
                       {"b12_im", detail::format_real(cp.b12.imag())},
                       {"sppt", sppt ? "true" : "false"}});
}

/// Block-triangular Gram decomposition of 4x the normalized circulant state
/// (the identity-scale convention the structured certifiers expect).
/// Needs a11 > 0 and b11 > 0 so X1 is invertible.
inline SpptTriple circulant_sppt_triple(const CirculantParams& cp) {
  if (!(cp.a11 > 0.0 && cp.b11 > 0.0)) {
    throw std::domain_error("circulant_sppt_triple: requires a11 > 0 and b11 > 0");
  }
  const double root = std::sqrt(cp.a11 * cp.b11);
  SpptTriple triple;
  triple.x1 = ComplexMatrix::Zero(2, 2);
  triple.x1(0, 0) = 2.0 * std::sqrt(cp.a11);
  triple.x1(1, 1) = 2.0 * std::sqrt(cp.b11);
  triple.s = ComplexMatrix::Zero(2, 2);
  triple.s(0, 1) = cp.a12 / root;
  triple.s(1, 0) = cp.b12 / root;
  triple.x2 = ComplexMatrix::Zero(2, 2);
  triple.x2(0, 0) = 2.0 * std::sqrt(std::max(0.0, cp.b22 - std::norm(cp.b12) / cp.b11));
  triple.x2(1, 1) = 2.0 * std::sqrt(std::max(0.0, cp.a22 - std::norm(cp.a12) / cp.a11));
  return triple;
}

}  // namespace sepball
