#include "lenscert/torsion.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace lenscert;

namespace {
constexpr mpfr_prec_t P = 152;
}

TEST_CASE("matrix T: small hand-checkable instances") {
  TorsionMatrixT t1(1, 2, P);
  CHECK(overlap(t1.at(1, 1).real(), oracles::zeta(3, 300)));

  TorsionMatrixT t2(2, 2, P);
  RealBall li3m1 = mul(RealBall::from_ratio(-3, 4, 300), oracles::zeta(3, 300));
  CHECK(overlap(t2.at(1, 1).real(), li3m1));
  CHECK(overlap(t2.at(1, 2).real(), oracles::zeta(3, 300)));
  CHECK(overlap(t2.at(2, 1).real(), oracles::zeta(3, 300)));
  CHECK(overlap(t2.at(2, 2).real(), oracles::zeta(3, 300)));

  TorsionMatrixT t3(3, 1, P);
  CHECK(t3.at(1, 1).imag().mid_d() == doctest::Approx(0.6766277).epsilon(1e-6));
  ComplexBall o = direct_series_oracle(2, RootOfUnity(1, 3), 100000, P);
  CHECK(overlap(t3.at(1, 1), o));
}

TEST_CASE("T entries depend only on ab mod n") {
  TorsionMatrixT t(12, 1, P);
  for (long a = 1; a <= 12; ++a)
    for (long b = 1; b <= 12; ++b) {
      long r = (a * b) % 12 == 0 ? 12 : (a * b) % 12;
      CHECK(overlap(t.at(a, b), t.at(r, 1)));
      CHECK(overlap(t.at(a, b), t.at(b, a)));
    }
}

TEST_CASE("lens torsion sign conventions") {
  // n=1, k=2, ch=1: L_3(1) = Re(i^{-2} zeta(3)) = -zeta(3), so tau = +zeta(3).
  RealBall one = RealBall::from_si(1, P);
  CHECK(overlap(lens_torsion(1, 2, 0, one, P), oracles::zeta(3, 300)));
  // ch = 0 kills everything.
  RealBall tau0 = lens_torsion(5, 2, 1, RealBall(P), P);
  CHECK(tau0.contains_zero());
  CHECK(tau0.rad_d() < 1e-30);
  // n=2, b=1, k=1: L_2(-1) is the imaginary part of a real value.
  RealBall tau2 = lens_torsion(2, 1, 1, one, P);
  CHECK(tau2.contains_zero());
  CHECK(tau2.rad_d() < 1e-30);
}

TEST_CASE("h-cobordism pairing is minus the lens torsion") {
  RealBall one = RealBall::from_si(1, P);
  for (long n : {3L, 4L, 7L})
    for (long k : {1L, 2L})
      for (long a = 1; a <= n; ++a)
        for (long b = 1; b <= n; ++b) {
          RealBall sum = add(hcob_pairing(n, k, a, b, one, P),
                             lens_torsion(n, k, a * b, one, P));
          CHECK(sum.contains_zero());
        }
  // n=4, a=2, b=2, k=1: zeta^{ab} = 1, so the pairing is 4 L_2(1) = 0.
  CHECK(hcob_pairing(4, 1, 2, 2, one, P).contains_zero());
  // n=4, a=1, b=1, k=1: 4 L_2(i) = 4 Catalan.
  CHECK(overlap(hcob_pairing(4, 1, 1, 1, one, P),
                mul_si(oracles::catalan(300), 4)));
}

TEST_CASE("conjugation relation conj(T) = T S") {
  for (long n : {1L, 3L, 8L})
    for (long k : {1L, 2L}) {
      TorsionMatrixT t(n, k, P);
      CHECK(conjugation_relation(t).pass);
    }
}

TEST_CASE("certified invertibility of T") {
  TorsionMatrixT t1(1, 1, P);
  DeterminantVerdict v1 = certify_T_invertible(t1);
  CHECK(v1.pass);
  CHECK(overlap(v1.det.real(), oracles::pi_sq_over(6, 300)));

  // n=2, k=2: det = Li_3(-1) zeta(3) - zeta(3)^2 = -(7/4) zeta(3)^2.
  TorsionMatrixT t2(2, 2, P);
  DeterminantVerdict v2 = certify_T_invertible(t2);
  CHECK(v2.pass);
  RealBall want = mul(RealBall::from_ratio(-7, 4, 300),
                      sqr(oracles::zeta(3, 300)));
  CHECK(overlap(v2.det.real(), want));

  DeterminantVerdict v12 = certify_T_invertible(TorsionMatrixT(12, 1, P));
  CHECK(v12.pass);
  CHECK(v12.abs_lower > 0);
}

TEST_CASE("unit submatrix determinant: two routes agree") {
  UnitSubmatrixVerdict v4 = unit_submatrix_check(4, 1, P);
  CHECK(v4.pass);
  CHECK(v4.routes_agree);
  CHECK(unit_submatrix_check(1, 1, P).pass);
  CHECK(unit_submatrix_check(5, 2, P).pass);
}

TEST_CASE("certified ranks of the real and imaginary parts") {
  RanksResult r31 = certified_ranks(TorsionMatrixT(3, 1, P));
  CHECK(r31.status == VerdictStatus::Certified);
  CHECK(r31.im.claimed_rank == 1);
  CHECK(r31.im.witness_margin > 0);

  RanksResult r22 = certified_ranks(TorsionMatrixT(2, 2, P));
  CHECK(r22.re.claimed_rank == 2);

  // n=2, k=1: all entries real, imaginary rank 0 certified vacuously.
  RanksResult r21 = certified_ranks(TorsionMatrixT(2, 1, P));
  CHECK(r21.im.claimed_rank == 0);
  CHECK(r21.status == VerdictStatus::Certified);
}

TEST_CASE("certified ranks sum to n") {
  for (long n = 1; n <= 10; ++n)
    for (long k : {1L, 2L}) {
      RanksResult r = certified_ranks(TorsionMatrixT(n, k, P));
      REQUIRE(r.status == VerdictStatus::Certified);
      CHECK(r.re.claimed_rank + r.im.claimed_rank == n);
    }
}

TEST_CASE("induction step: (1 - p^{-k-1} E) T' stays invertible") {
  InductionStepVerdict v1 = induction_step_check(1, 2, 1, P);
  CHECK(v1.pass);
  // Scalar case: (1 - 1/4) zeta(2).
  CHECK(v1.product_det_lower ==
        doctest::Approx(0.75 * 1.6449340668).epsilon(1e-9));
  CHECK(induction_step_check(2, 2, 1, P).pass);
  CHECK(induction_step_check(3, 2, 2, P).pass);
}

TEST_CASE("Kubert row identities inside T") {
  for (long n : {2L, 4L, 6L, 9L, 12L})
    for (long k : {1L, 2L})
      CHECK(kubert_row_check(TorsionMatrixT(n, k, P)).pass);
}

TEST_CASE("midpoint SVD sanity agrees with certified ranks") {
  for (long n : {3L, 5L, 8L})
    for (long k : {1L, 2L}) {
      TorsionMatrixT t(n, k, P);
      MidpointSvdSanity s = midpoint_svd_sanity(t);
      RanksResult r = certified_ranks(t);
      CHECK(s.re_rank == r.re.claimed_rank);
      CHECK(s.im_rank == r.im.claimed_rank);
    }
}
