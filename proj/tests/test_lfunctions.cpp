#include "lenscert/lfunctions.hpp"

#include "lenscert/polylog.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace lenscert;

namespace {
constexpr mpfr_prec_t P = 152;

DirichletCharacter trivial_mod(long n) {
  return enumerate_characters(n).characters[0];
}

DirichletCharacter aperiodic_mod4() {
  for (const auto& chi : enumerate_characters(4).characters)
    if (!chi.is_trivial()) return chi;
  throw std::logic_error("no nontrivial character mod 4");
}
}  // namespace

TEST_CASE("e_n(chi) mod 1 contains zeta(k+1)") {
  for (long k = 1; k <= 3; ++k) {
    EValue e = e_n_chi(trivial_mod(1), k, P);
    CHECK(overlap(e.value.real(),
                  oracles::zeta(static_cast<unsigned long>(k + 1), 300)));
    CHECK(e.value.imag().contains_zero());
  }
}

TEST_CASE("e_n(chi) mod 2 contains Li_{k+1}(-1) = -(1-2^{-k}) zeta(k+1)") {
  for (long k = 1; k <= 3; ++k) {
    EValue e = e_n_chi(trivial_mod(2), k, P);
    RealBall zk = oracles::zeta(static_cast<unsigned long>(k + 1), 300);
    RealBall factor = sub(mul_2exp(RealBall::from_si(1, 300), -k),
                          RealBall::from_si(1, 300));  // 2^{-k} - 1
    CHECK(overlap(e.value.real(), mul(factor, zk)));
    CHECK(e.value.imag().contains_zero());
  }
}

TEST_CASE("e_4 of the aperiodic character, k=1, contains 2i*Catalan") {
  EValue e = e_n_chi(aperiodic_mod4(), 1, P);
  CHECK(e.value.real().contains_zero());
  CHECK(overlap(e.value.imag(), mul_si(oracles::catalan(300), 2)));
  // Same value from the oracle pipeline Li_2(i) - Li_2(-i).
  ComplexBall o = sub(direct_series_oracle(2, RootOfUnity(1, 4), 200000, P),
                      direct_series_oracle(2, RootOfUnity(3, 4), 200000, P));
  CHECK(overlap(e.value, o));
}

TEST_CASE("Dirichlet L values against classical constants") {
  CHECK(overlap(dirichlet_L(trivial_mod(1), 2, P, LMethod::Hurwitz).value.real(),
                oracles::pi_sq_over(6, 300)));
  // L(chi_{-4}, 2) = Catalan, by the alternating series 1 - 1/9 + 1/25 - ...
  CHECK(overlap(dirichlet_L(aperiodic_mod4(), 2, P, LMethod::Hurwitz).value.real(),
                oracles::catalan_alternating(1000000, 300)));
  // Trivial mod 2: odd-m series (1 - 1/4) zeta(2) = pi^2/8.
  CHECK(overlap(dirichlet_L(trivial_mod(2), 2, P, LMethod::Hurwitz).value.real(),
                oracles::pi_sq_over(8, 300)));
  CHECK_THROWS(dirichlet_L(trivial_mod(1), 1, P, LMethod::Hurwitz));
}

TEST_CASE("the two L-function methods agree") {
  for (long n : {1L, 3L, 4L, 5L, 8L, 12L})
    for (const auto& chi : enumerate_characters(n).characters)
      for (long s : {2L, 3L}) {
        LValue a = dirichlet_L(chi, s, P, LMethod::Hurwitz);
        LValue b = dirichlet_L(chi, s, P, LMethod::RestrictedSeries);
        CHECK(overlap(a.value, b.value));
      }
}

TEST_CASE("partial Euler products approximate L (uncertified sanity)") {
  EulerPartial e1 = euler_partial(trivial_mod(1), 2, 10000);
  CHECK(std::abs(e1.value.real() - 1.6449340668) < 1e-3);
  EulerPartial e4 = euler_partial(aperiodic_mod4(), 2, 10000);
  CHECK(std::abs(e4.value.real() - 0.9159655942) < 1e-3);
  EulerPartial empty = euler_partial(trivial_mod(1), 2, 1);
  CHECK(empty.value == std::complex<double>(1.0, 0.0));
}

TEST_CASE("factorization e_n(chi) = c(1,chi) L(chi,k+1) for aperiodic chi") {
  OverlapVerdict v4 = factorization_check(aperiodic_mod4(), 1, P);
  CHECK(v4.pass);
  CHECK(v4.discrepancy < std::pow(2.0, -100.0));
  CHECK(factorization_check(trivial_mod(1), 2, P).pass);
  for (const auto& chi : enumerate_characters(3).characters)
    if (!chi.is_trivial()) CHECK(factorization_check(chi, 1, P).pass);
  CHECK_THROWS(factorization_check(trivial_mod(4), 1, P));
}

TEST_CASE("recursion case 1 (p divides n')") {
  // n'=2, p=2: e_4(lift) = Li_2(i) + Li_2(-i) = Li_2(-1)/2, both sides
  // enclosing -pi^2/24.
  OverlapVerdict v = recursion_case1(trivial_mod(2), 2, 1, P);
  CHECK(v.pass);
  EValue e4 = e_n_chi(lift_character(trivial_mod(2), 4), 1, P);
  CHECK(overlap(e4.value.real(), neg(oracles::pi_sq_over(24, 300))));
  CHECK(recursion_case1(aperiodic_mod4(), 2, 1, P).pass);
  CHECK(recursion_case1(trivial_mod(9), 3, 2, P).pass);
  CHECK_THROWS(recursion_case1(trivial_mod(2), 3, 1, P));
}

TEST_CASE("recursion case 2 (p coprime to n')") {
  // n'=1, p=2: e_2 = (2^{-k} - 1) zeta(k+1) = Li_{k+1}(-1).
  for (long k = 1; k <= 3; ++k) {
    CHECK(recursion_case2(trivial_mod(1), 2, k, P).pass);
    EValue e2 = e_n_chi(trivial_mod(2), k, P);
    ComplexBall direct =
        direct_series_oracle(k + 1, RootOfUnity(1, 2), 100000, P);
    CHECK(overlap(e2.value, direct));
  }
  CHECK(recursion_case2(trivial_mod(2), 3, 1, P).pass);
  for (const auto& chi : enumerate_characters(4).characters)
    if (!chi.is_trivial()) CHECK(recursion_case2(chi, 3, 2, P).pass);
  CHECK_THROWS(recursion_case2(trivial_mod(4), 2, 1, P));
}

TEST_CASE("nonzero certification margins") {
  NonzeroResult r1 = nonzero_certify(trivial_mod(1), 1, P);
  CHECK(r1.status == VerdictStatus::Certified);
  CHECK(r1.evalue.nonzero_margin == doctest::Approx(1.6449340668).epsilon(1e-9));

  NonzeroResult r4 = nonzero_certify(aperiodic_mod4(), 1, P);
  CHECK(r4.status == VerdictStatus::Certified);
  CHECK(r4.evalue.nonzero_margin ==
        doctest::Approx(2 * 0.9159655942).epsilon(1e-9));

  for (const auto& chi : enumerate_characters(12).characters)
    for (long k : {1L, 2L})
      CHECK(nonzero_certify(chi, k, P).status == VerdictStatus::Certified);
}

TEST_CASE("e_n of the conjugate character is chi(-1) times the conjugate") {
  // conj(Li) at zeta^a equals Li at zeta^{-a}, so re-indexing the unit sum
  // gives e_n(conj chi) = chi(-1) * conj(e_n(chi)); the sign matters for odd
  // characters.
  for (long n : {5L, 8L, 12L})
    for (const auto& chi : enumerate_characters(n).characters) {
      EValue e = e_n_chi(chi, 2, P);
      EValue ebar = e_n_chi(chi.conjugate(), 2, P);
      long em1 = chi.exponent_at(n - 1);
      ComplexBall rhs = conj(e.value);
      if (2 * em1 == chi.order()) rhs = neg(rhs);
      CHECK(overlap(ebar.value, rhs));
    }
}
