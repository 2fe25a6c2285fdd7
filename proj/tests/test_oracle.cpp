#include "sepball/families.hpp"
#include "sepball/nested_norm.hpp"
#include "sepball/oracle.hpp"

#include <catch2/catch.hpp>

#include "helpers.hpp"

#include <random>

using namespace sepball;
using test_helpers::random_hermitian;
using test_helpers::random_matrix;

TEST_CASE("partial_transpose") {
  SECTION("maximally mixed is a fixed point") {
    const QuantumState mm = maximally_mixed(DimensionProfile({2, 3}));
    CHECK(partial_transpose(mm).isApprox(mm.matrix()));
  }

  SECTION("factorizes over product states") {
    std::mt19937 rng(71);
    const ComplexMatrix a = random_hermitian(rng, 2);
    const ComplexMatrix b = random_hermitian(rng, 3);
    const QuantumState s(kron(a, b), DimensionProfile({2, 3}), false);
    CHECK(partial_transpose(s).isApprox(kron(a, b.transpose()), 1e-13));
  }

  SECTION("involution preserving trace and frobenius norm") {
    std::mt19937 rng(72);
    for (int trial = 0; trial < 30; ++trial) {
      const ComplexMatrix h = random_hermitian(rng, 6);
      const QuantumState s(h, DimensionProfile({2, 3}), false);
      const ComplexMatrix pt = partial_transpose(s);
      CHECK((pt - pt.adjoint()).norm() <= 1e-14 * h.norm());
      const QuantumState spt(pt, DimensionProfile({2, 3}), false);
      CHECK(partial_transpose(spt).isApprox(h, 0.0));
      CHECK(pt.trace().real() == Approx(h.trace().real()).margin(1e-13));
      CHECK(pt.norm() == Approx(h.norm()).margin(1e-13));
    }
  }

  SECTION("multipartite profiles are rejected") {
    CHECK_THROWS_AS(partial_transpose(maximally_mixed(DimensionProfile({2, 2, 2}))),
                    std::domain_error);
  }
}

TEST_CASE("ppt_check on the named families") {
  CHECK(ppt_check(horodecki_3x3(0.5)).is_ppt);
  CHECK(ppt_check(werner(3, 0.9)).is_ppt);

  const PptReport iso = ppt_check(isotropic(2, 0.5));
  CHECK_FALSE(iso.is_ppt);
  CHECK(iso.min_pt_eigenvalue == Approx((1.0 - 3.0 * 0.5) / 4.0).margin(1e-12));
}

TEST_CASE("separability_decide_low_dim") {
  CHECK(separability_decide_low_dim(werner(2, 0.5)));
  CHECK_FALSE(separability_decide_low_dim(werner(2, -1.0)));
  CHECK_THROWS_AS(separability_decide_low_dim(werner(3, 0.5)), std::domain_error);
  CHECK_THROWS_AS(separability_decide_low_dim(maximally_mixed(DimensionProfile({2, 2, 2}))),
                  std::domain_error);
}

TEST_CASE("nested_norm_bruteforce") {
  SECTION("identity") {
    for (auto dims : {std::vector<int>{2, 2}, {3, 3}, {2, 2, 2}}) {
      const DimensionProfile profile(dims);
      const int n = profile.total_dim();
      CHECK(nested_norm_bruteforce(ComplexMatrix::Identity(n, n), profile) ==
            Approx(1.0).margin(1e-10));
    }
  }

  SECTION("werner identity-scale distance at d=2, b=0.3") {
    const QuantumState w = werner(2, 0.3);
    const ComplexMatrix delta = w.identity_scale() - ComplexMatrix::Identity(4, 4);
    CHECK(nested_norm_bruteforce(delta, w.profile()) == Approx(0.4).margin(1e-10));
  }

  SECTION("agreement on random hermitian input") {
    std::mt19937 rng(73);
    const DimensionProfile profile({2, 3});
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexMatrix h = random_hermitian(rng, 6);
      CHECK(nested_norm_bruteforce(h, profile) ==
            Approx(nested_norm(h, profile)).margin(1e-8));
    }
  }

  SECTION("inertia-bisection path for blocks larger than 3") {
    std::mt19937 rng(74);
    const DimensionProfile profile({4, 2});
    for (int trial = 0; trial < 25; ++trial) {
      const ComplexMatrix x = random_matrix(rng, 8, 8);
      CHECK(nested_norm_bruteforce(x, profile) ==
            Approx(nested_norm(x, profile)).margin(1e-8));
    }
    for (int trial = 0; trial < 25; ++trial) {
      const ComplexMatrix x = random_matrix(rng, 5, 5);
      CHECK(oracle_detail::spectral_norm_indep(x) ==
            Approx(spectral_norm(x)).margin(1e-10));
    }
  }

  SECTION("dimension mismatch is rejected") {
    CHECK_THROWS_AS(nested_norm_bruteforce(ComplexMatrix::Identity(4, 4),
                                           DimensionProfile({2, 3})),
                    std::invalid_argument);
  }
}
