#include "lenscert/ball.hpp"
#include "lenscert/polylog.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace lenscert;

namespace {
constexpr mpfr_prec_t P = 152;
}

TEST_CASE("ball arithmetic produces enclosures") {
  RealBall a = RealBall::from_ratio(1, 3, P);
  RealBall b = RealBall::from_ratio(1, 7, P);
  RealBall s = add(a, b);  // 10/21
  CHECK(s.contains(RealBall::from_ratio(10, 21, 300).mid()));
  RealBall p = mul(a, b);  // 1/21
  CHECK(p.contains(RealBall::from_ratio(1, 21, 300).mid()));
  RealBall q = div(a, b);  // 7/3
  CHECK(q.contains(RealBall::from_ratio(7, 3, 300).mid()));
}

TEST_CASE("zero containment and exclusion") {
  RealBall z = sub(RealBall::from_ratio(1, 3, P),
                   RealBall::from_ratio(1, 3, P));
  CHECK(z.contains_zero());
  CHECK(!z.excludes_zero());
  RealBall one = RealBall::from_si(1, P);
  CHECK(one.excludes_zero());
  CHECK(one.abs_lower_d() > 0.99);
}

TEST_CASE("overlap has no false negatives on shared values") {
  RealBall a = RealBall::pi(P);
  RealBall b = RealBall::pi(64);
  CHECK(overlap(a, b));
  CHECK(!overlap(RealBall::from_si(1, P), RealBall::from_si(2, P)));
}

TEST_CASE("radius grows monotonically under error injection") {
  RealBall a = RealBall::from_si(1, P);
  double r0 = a.rad_d();
  a.add_error_2exp(-100);
  CHECK(a.rad_d() > r0);
  CHECK(a.rad_d() >= std::pow(2.0, -100));
}

TEST_CASE("trig enclosures contain the exact values") {
  // sin(pi/6) = 1/2, cos(pi/3) = 1/2
  RealBall th6 = div_si(RealBall::pi(P), 6);
  RealBall th3 = div_si(RealBall::pi(P), 3);
  CHECK(sin_ball(th6).contains(RealBall::from_ratio(1, 2, 300).mid()));
  CHECK(cos_ball(th3).contains(RealBall::from_ratio(1, 2, 300).mid()));
}

TEST_CASE("unit circle points: quarter turns are exact") {
  ComplexBall i = unit_circle_point(1, 4, P);
  CHECK(i.real().is_exact());
  CHECK(i.imag().is_exact());
  CHECK(i.real().contains_zero());
  CHECK(i.imag().contains(RealBall::from_si(1, P).mid()));
  ComplexBall m1 = unit_circle_point(1, 2, P);
  CHECK(m1.real().contains(RealBall::from_si(-1, P).mid()));
  CHECK(m1.imag().contains_zero());
}

TEST_CASE("hurwitz zeta: s=2, x=1 contains pi^2/6") {
  RealBall h = hurwitz_zeta(2, 1, 1, P);
  CHECK(oracles::agree_to_digits(h, oracles::pi_sq_over(6, 300), 30));
}

TEST_CASE("hurwitz zeta: s=2, x=1/2 contains pi^2/2") {
  RealBall h = hurwitz_zeta(2, 1, 2, P);
  CHECK(oracles::agree_to_digits(h, oracles::pi_sq_over(2, 300), 30));
}

TEST_CASE("hurwitz zeta: s=3, x=1 contains zeta(3)") {
  RealBall h = hurwitz_zeta(3, 1, 1, P);
  CHECK(oracles::agree_to_digits(h, oracles::zeta(3, 300), 30));
}

TEST_CASE("hurwitz zeta rejects s < 2") {
  CHECK_THROWS(hurwitz_zeta(1, 1, 1, P));
}

TEST_CASE("hurwitz zeta against a direct-series oracle at shifted x") {
  // sum_{m>=0} (m + 1/3)^{-4} by 2000 naive terms with integral tail bound
  // 1/(3 (M-1)^3) >= integral_{M-2/3}^inf x^-4 dx.
  RealBall acc(300);
  const long M = 2000;
  for (long m = 0; m < M; ++m)
    acc = add(acc, pow_si(add(RealBall::from_si(m, 300),
                              RealBall::from_ratio(1, 3, 300)),
                          -4));
  acc.add_error_abs(div_si(pow_si(RealBall::from_si(M - 1, 300), -3), 3));
  CHECK(overlap(hurwitz_zeta(4, 1, 3, P), acc));
}

TEST_CASE("complex ball multiplication matches hand expansion") {
  ComplexBall a(RealBall::from_si(2, P), RealBall::from_si(3, P));
  ComplexBall b(RealBall::from_si(-1, P), RealBall::from_si(4, P));
  ComplexBall p = mul(a, b);  // (2+3i)(-1+4i) = -14 + 5i
  CHECK(p.real().contains(RealBall::from_si(-14, P).mid()));
  CHECK(p.imag().contains(RealBall::from_si(5, P).mid()));
}

TEST_CASE("precision default honors the environment override") {
  CHECK(default_precision_bits() >= 53);
}
