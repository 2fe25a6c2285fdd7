#include "sepball/certifiers.hpp"
#include "sepball/families.hpp"
#include "sepball/oracle.hpp"
#include "sepball/structured.hpp"

#include <catch2/catch.hpp>

#include "helpers.hpp"

#include <random>

using namespace sepball;
using test_helpers::random_matrix;
using test_helpers::random_unit_vector;

TEST_CASE("pseudopure_epsilon_bound") {
  SECTION("basis state in 2x2") {
    ComplexVector v = ComplexVector::Zero(4);
    v(0) = 1.0;
    CHECK(pseudopure_epsilon_bound(v, 2, 2) == Approx(0.2).margin(1e-14));
  }

  SECTION("maximally entangled state in 2x2") {
    ComplexVector v = ComplexVector::Zero(4);
    v(0) = v(3) = 1.0 / std::sqrt(2.0);
    CHECK(pseudopure_epsilon_bound(v, 2, 2) == Approx(1.0 / 3.0).margin(1e-14));
  }

  SECTION("non-unit vectors are rejected") {
    ComplexVector v = ComplexVector::Ones(4);
    CHECK_THROWS_AS(pseudopure_epsilon_bound(v, 2, 2), std::domain_error);
    CHECK_THROWS_AS(pseudopure_epsilon_bound(ComplexVector::Ones(3), 2, 2),
                    std::invalid_argument);
  }

  SECTION("bound improves with the minimum chunk norm and tends to 1/(n+1)") {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexVector v = random_unit_vector(rng, 6);
      const double bound = pseudopure_epsilon_bound(v, 2, 3);
      REQUIRE(bound > 0.0);
      REQUIRE(bound <= 1.0);
    }
    // nearly all weight in one chunk: the other chunk norm goes to zero
    ComplexVector v = ComplexVector::Zero(6);
    const double tiny = 1e-9;
    v(0) = std::sqrt(1.0 - tiny * tiny);
    v(3) = tiny;
    CHECK(pseudopure_epsilon_bound(v, 2, 3) == Approx(1.0 / 7.0).margin(1e-6));

    // balancing the chunks only raises the bound
    double previous = 0.0;
    for (double share : {0.05, 0.15, 0.25, 0.35, 0.5}) {
      ComplexVector w = ComplexVector::Zero(4);
      w(0) = std::sqrt(1.0 - share);
      w(2) = std::sqrt(share);
      const double bound = pseudopure_epsilon_bound(w, 2, 2);
      REQUIRE(bound >= previous);
      previous = bound;
    }
  }

  SECTION("beats the comparator under the balanced-chunk condition") {
    std::mt19937 rng(52);
    int accepted = 0;
    while (accepted < 100) {
      const int n1 = 2 + static_cast<int>(rng() % 2);
      const int n2 = 2 + static_cast<int>(rng() % 2);
      const double nn = n1 * n2;
      const ComplexVector v = random_unit_vector(rng, n1 * n2);
      double min_chunk = 1.0;
      for (int i = 0; i < n1; ++i) {
        min_chunk = std::min(min_chunk, v.segment(i * n2, n2).squaredNorm());
      }
      if (min_chunk < (nn + 1.0 - std::sqrt(nn * (nn - 1.0))) / nn) {
        continue;
      }
      ++accepted;
      REQUIRE(pseudopure_epsilon_bound(v, n1, n2) >=
              gurvits_barnum_epsilon(n1, n2) - 1e-12);
    }
  }
}

TEST_CASE("pseudopure_epsilon_bound_2xn") {
  CHECK(pseudopure_epsilon_bound_2xn(2) == Approx(0.302169).margin(1e-6));
  CHECK(pseudopure_epsilon_bound_2xn(3) == Approx(0.224009).margin(1e-6));
  CHECK_THROWS_AS(pseudopure_epsilon_bound_2xn(0), std::invalid_argument);

  SECTION("beats the comparator bound for every nontrivial n2") {
    // the crossover sits at n2 ~ 1.82: the degenerate single-qubit point
    // n2 = 1 is the one place the comparator wins
    CHECK(pseudopure_epsilon_bound_2xn(1) < gurvits_barnum_epsilon(2, 1));
    for (int n2 = 2; n2 <= 64; ++n2) {
      REQUIRE(pseudopure_epsilon_bound_2xn(n2) > gurvits_barnum_epsilon(2, n2));
    }
  }
}

TEST_CASE("gurvits_barnum_epsilon") {
  CHECK(gurvits_barnum_epsilon(2, 2) == Approx(1.0 / std::sqrt(12.0)).margin(1e-12));
  CHECK(gurvits_barnum_epsilon(2, 3) == Approx(1.0 / std::sqrt(30.0)).margin(1e-12));
  CHECK(gurvits_barnum_epsilon(2, 2) == Approx(0.288675).margin(1e-6));
  CHECK(gurvits_barnum_epsilon(2, 3) == Approx(0.182574).margin(1e-6));
  CHECK_THROWS_AS(gurvits_barnum_epsilon(1, 1), std::domain_error);
}

TEST_CASE("pseudopure bound certifies through the scaled ball and the exact oracle") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const int n1 = 2;
    const int n2 = 2 + static_cast<int>(trial % 2);
    PseudopureSpec spec;
    spec.n1 = n1;
    spec.n2 = n2;
    spec.pi_vector = random_unit_vector(rng, n1 * n2);
    spec.epsilon = pseudopure_epsilon_bound(spec.pi_vector, n1, n2);
    const QuantumState rho = pseudopure(spec);
    REQUIRE(certify_nested_ball_scaled(rho).certified());
    REQUIRE(separability_decide_low_dim(rho));
  }
}

TEST_CASE("is_sppt") {
  std::mt19937 rng(54);

  SECTION("normal S always qualifies") {
    SpptTriple triple;
    triple.x1 = random_matrix(rng, 3, 3);
    triple.x2 = random_matrix(rng, 3, 3);
    triple.s = ComplexMatrix::Zero(3, 3);
    triple.s(0, 0) = Complex(0.3, 0.4);
    triple.s(1, 1) = Complex(-1.0, 0.2);
    triple.s(2, 2) = 2.0;
    CHECK(is_sppt(triple));
  }

  SECTION("zero X1 always qualifies") {
    SpptTriple triple{ComplexMatrix::Zero(2, 2), random_matrix(rng, 2, 2),
                      random_matrix(rng, 2, 2)};
    CHECK(is_sppt(triple));
  }

  SECTION("nilpotent S with identity X1 does not") {
    SpptTriple triple;
    triple.x1 = ComplexMatrix::Identity(2, 2);
    triple.x2 = ComplexMatrix::Identity(2, 2);
    triple.s = ComplexMatrix::Zero(2, 2);
    triple.s(0, 1) = 1.0;
    CHECK_FALSE(is_sppt(triple));
  }
}

TEST_CASE("certify_sppt_block_dominance") {
  SECTION("identity triple is the maximally mixed state") {
    SpptTriple triple{ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2),
                      ComplexMatrix::Zero(2, 2)};
    const auto report = certify_sppt_block_dominance(triple);
    CHECK(report.certified());
    CHECK(report.norm_value == Approx(0.0).margin(1e-14));
  }

  SECTION("boundary spread certifies and the oracle agrees") {
    SpptTriple triple;
    triple.x1 = ComplexMatrix::Identity(2, 2);
    triple.x2 = ComplexMatrix::Identity(2, 2);
    triple.s = ComplexMatrix::Zero(2, 2);
    triple.s(0, 0) = 1.0;
    const auto report = certify_sppt_block_dominance(triple);
    CHECK(report.norm_value == Approx(1.0).margin(1e-14));
    CHECK(report.metrics.at("sigma_max") == Approx(1.0));
    CHECK(report.metrics.at("sigma_min") == Approx(0.0).margin(1e-14));
    CHECK(report.certified());
    REQUIRE(separability_decide_low_dim(sppt_state(triple)));
  }

  SECTION("failed dominance is inconclusive, not invalid") {
    SpptTriple triple{ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2),
                      ComplexMatrix::Zero(2, 2)};
    const auto report = certify_sppt_block_dominance(triple);
    CHECK(report.verdict == Verdict::Inconclusive);
    CHECK(report.psd_ok);
  }
}

TEST_CASE("certify_sppt_eigenvalue_window") {
  SECTION("identity triple satisfies the first window") {
    SpptTriple triple{ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2),
                      ComplexMatrix::Zero(2, 2)};
    const auto report = certify_sppt_eigenvalue_window(triple);
    CHECK(report.certified());
    CHECK(report.metrics.at("eta_min") == Approx(1.0).margin(1e-12));
    CHECK(report.metrics.at("eta_max") == Approx(1.0).margin(1e-12));
    REQUIRE_FALSE(report.satisfied_conditions.empty());
    CHECK(std::find(report.satisfied_conditions.begin(), report.satisfied_conditions.end(),
                    "i") != report.satisfied_conditions.end());
  }

  SECTION("circulant instance with b22 >= a11 > 0 satisfies window (i)") {
    CirculantParams cp;
    cp.a11 = 0.20;
    cp.a22 = 0.30;
    cp.b11 = 0.25;
    cp.b22 = 0.25;
    cp.a12 = Complex(0.1, 0.0);
    cp.b12 = Complex(0.0, 0.1);  // |a12| = |b12|: the strong-PPT case
    const SpptTriple triple = circulant_sppt_triple(cp);
    const auto report = certify_sppt_eigenvalue_window(triple);
    CHECK(report.certified());
    CHECK(std::find(report.satisfied_conditions.begin(), report.satisfied_conditions.end(),
                    "i") != report.satisfied_conditions.end());
    // and the triple reproduces 4x the circulant matrix
    const QuantumState state = circulant_2x2(cp);
    CHECK(sppt_state(triple).matrix().isApprox(ComplexMatrix(4.0 * state.matrix()), 1e-12));
    CHECK(separability_decide_low_dim(state));
  }

  SECTION("window (ii) triples are separable per the exact oracle") {
    std::mt19937 rng(55);
    int accepted = 0;
    while (accepted < 25) {
      SpptTriple triple;
      triple.x1 = ComplexMatrix::Identity(2, 2);
      ComplexMatrix x2 = random_matrix(rng, 2, 2);
      x2 *= 0.82 / spectral_norm(x2);
      triple.x2 = x2;
      ComplexMatrix s = random_matrix(rng, 2, 2);
      s *= 0.30 / spectral_norm(s);
      triple.s = s;
      const auto report = certify_sppt_eigenvalue_window(triple);
      if (std::find(report.satisfied_conditions.begin(), report.satisfied_conditions.end(),
                    "ii") == report.satisfied_conditions.end()) {
        continue;
      }
      ++accepted;
      REQUIRE(report.certified());
      REQUIRE(separability_decide_low_dim(sppt_state(triple)));
    }
  }

  SECTION("singular X1 is redirected") {
    SpptTriple triple{ComplexMatrix::Zero(2, 2), ComplexMatrix::Identity(2, 2),
                      ComplexMatrix::Zero(2, 2)};
    CHECK_THROWS_AS(certify_sppt_eigenvalue_window(triple), std::domain_error);
  }
}

TEST_CASE("certified triples pass the exact separability oracle") {
  std::mt19937 rng(56);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 50; ++trial) {
    SpptTriple triple;
    triple.x1 = random_matrix(rng, 2, 2);
    triple.x2 = random_matrix(rng, 2, 2);
    triple.s = 0.5 * random_matrix(rng, 2, 2);
    const auto dominance = certify_sppt_block_dominance(triple);
    bool window_certified = false;
    try {
      window_certified = certify_sppt_eigenvalue_window(triple).certified();
    } catch (const std::domain_error&) {
      window_certified = false;
    }
    if (!dominance.certified() && !window_certified) {
      continue;
    }
    ++checked;
    REQUIRE(separability_decide_low_dim(sppt_state(triple)));
  }
  REQUIRE(checked >= 20);
}
