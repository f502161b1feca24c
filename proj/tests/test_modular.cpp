#include "lenscert/modular.hpp"

#include <doctest.h>

#include <Eigen/Dense>

using namespace lenscert;

TEST_CASE("primitive arithmetic helpers") {
  CHECK(gcd_long(12, 18) == 6);
  CHECK(gcd_long(1, 7) == 1);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
  CHECK(mod_pow(3, 5, 7) == 5);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK((mod_inverse(5, 12) * 5) % 12 == 1);
  CHECK_THROWS(mod_inverse(4, 12));
}

TEST_CASE("roots of unity reduce and multiply exactly") {
  RootOfUnity z(2, 8);
  RootOfUnity r = z.reduced();
  CHECK(r.order == 4);
  CHECK(r.exponent == 1);
  CHECK(z == RootOfUnity(1, 4));
  CHECK(z.conj() == RootOfUnity(-1, 4));
  CHECK(z.pow(2) == RootOfUnity(1, 2));
  CHECK((RootOfUnity(1, 6) * RootOfUnity(2, 6)) == RootOfUnity(1, 2));
}

TEST_CASE("unit group: n=1 is the trivial group") {
  UnitGroup g = unit_group(1);
  CHECK(g.phi() == 1);
  CHECK(g.elements == std::vector<long>{1});
}

TEST_CASE("unit group: n=4") {
  UnitGroup g = unit_group(4);
  CHECK(g.phi() == 2);
  CHECK(g.elements == std::vector<long>{1, 3});
}

TEST_CASE("unit group: n=12") {
  UnitGroup g = unit_group(12);
  CHECK(g.phi() == 4);
  CHECK(g.elements == std::vector<long>{1, 5, 7, 11});
}

TEST_CASE("unit group: discrete log round-trips for composite moduli") {
  for (long n : {8L, 15L, 16L, 24L, 35L, 100L}) {
    UnitGroup g = unit_group(n);
    long order = 1;
    for (long d : g.generator_orders) order *= d;
    CHECK(order == g.phi());
    for (long u : g.elements)
      CHECK(g.unit_from_exponents(g.exponents_of(u)) == u);
  }
}

TEST_CASE("negation permutation: small cases") {
  PermMatrixS s1 = negation_perm(1);
  CHECK(s1.mat == Eigen::MatrixXi::Identity(1, 1));
  PermMatrixS s2 = negation_perm(2);
  CHECK(s2.mat == Eigen::MatrixXi::Identity(2, 2));
  CHECK(s2.fixed_points == 2);
  PermMatrixS s3 = negation_perm(3);
  CHECK(s3.mat(0, 1) == 1);  // 1 <-> 2
  CHECK(s3.mat(1, 0) == 1);
  CHECK(s3.mat(2, 2) == 1);  // 3 fixed
  CHECK(s3.fixed_points == 1);
  CHECK(s3.two_cycles == 1);
}

TEST_CASE("negation permutation is an involution") {
  for (long n = 1; n <= 12; ++n) {
    PermMatrixS s = negation_perm(n);
    CHECK(s.mat * s.mat == Eigen::MatrixXi::Identity(n, n));
  }
}

TEST_CASE("rank of 1 +- S from cycle structure") {
  CHECK(rank_one_plus_minus_S(3, +1) == 2);
  CHECK(rank_one_plus_minus_S(4, +1) == 3);
  CHECK(rank_one_plus_minus_S(4, -1) == 1);
  CHECK(rank_one_plus_minus_S(1, -1) == 0);
  for (long n = 1; n <= 100; ++n) {
    CHECK(rank_one_plus_minus_S(n, +1) == (n + 2) / 2);
    CHECK(rank_one_plus_minus_S(n, -1) == (n - 1) / 2);
    CHECK(rank_one_plus_minus_S(n, +1) + rank_one_plus_minus_S(n, -1) == n);
  }
}

TEST_CASE("shift matrix: small cases and prime guard") {
  ShiftMatrixE e22 = shift_matrix(2, 2);
  CHECK(e22.mat(0, 1) == 1);  // E_{1,2}
  CHECK(e22.mat(1, 1) == 1);  // E_{2,2}
  ShiftMatrixE e32 = shift_matrix(3, 2);
  // a -> 2a mod 3: 1->2, 2->1, 3->3; a permutation matrix.
  CHECK(e32.mat.rowwise().sum() == Eigen::VectorXi::Ones(3));
  CHECK(e32.mat.colwise().sum().transpose() == Eigen::VectorXi::Ones(3));
  ShiftMatrixE e13 = shift_matrix(1, 3);
  CHECK(e13.mat == Eigen::MatrixXi::Identity(1, 1));
  CHECK_THROWS(shift_matrix(4, 6));
}

TEST_CASE("shift matrix trajectories are eventually periodic") {
  EigenClaimVerdict v32 = eigen_claim_E(shift_matrix(3, 2));
  CHECK(v32.all_trajectories_periodic);
  CHECK(v32.spectral_radius_bound == 1.0);
  EigenClaimVerdict v42 = eigen_claim_E(shift_matrix(4, 2));
  CHECK(v42.all_trajectories_periodic);
  EigenClaimVerdict v1 = eigen_claim_E(shift_matrix(1, 2));
  CHECK(v1.all_trajectories_periodic);
  CHECK(v1.trajectories.size() == 1);
}

TEST_CASE("pi0 monoid units by exact search") {
  CHECK(pi0_monoid(1).units == std::vector<long>{0, 2});
  CHECK(pi0_monoid(2).units == std::vector<long>{0, 1});
  CHECK(pi0_monoid(5).units == std::vector<long>{0});
}

TEST_CASE("pi0 monoid laws on a window") {
  Pi0Monoid m = pi0_monoid(3);
  for (long x = -10; x <= 10; ++x) {
    CHECK(m.product(x, 0) == x);
    for (long y = -10; y <= 10; ++y)
      CHECK(m.product(x, y) == m.product(y, x));
  }
}
