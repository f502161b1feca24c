#include "lenscert/polylog.hpp"

#include <stdexcept>

namespace lenscert {

namespace {
constexpr long kBernoulliCap = 64;
}

const std::vector<mpq_class>& bernoulli_numbers() {
  static const std::vector<mpq_class> cache = [] {
    std::vector<mpq_class> b(kBernoulliCap + 1);
    b[0] = 1;
    for (long m = 1; m <= kBernoulliCap; ++m) {
      mpq_class acc = 0;
      for (long j = 0; j < m; ++j) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + 1),
                     static_cast<unsigned long>(j));
        acc += mpq_class(c) * b[static_cast<size_t>(j)];
      }
      b[static_cast<size_t>(m)] = -acc / (m + 1);
    }
    return b;
  }();
  return cache;
}

mpq_class bernoulli_poly(long m, const mpq_class& x) {
  const auto& B = bernoulli_numbers();
  if (m < 0 || m > kBernoulliCap) throw std::invalid_argument("bernoulli_poly: degree out of range");
  mpq_class acc = 0;
  mpq_class xp = 1;  // x^{m-j}, built from the top down
  // Horner over descending powers: sum_j C(m,j) B_j x^{m-j}.
  for (long j = m; j >= 0; --j) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(j));
    acc += mpq_class(c) * B[static_cast<size_t>(j)] * xp;
    xp *= x;
  }
  return acc;
}

namespace {

// One Euler-Maclaurin evaluation with shift M and 31 correction terms.
// Sets rem_ok when the remainder bound is below 2^{-(prec+10)}.
RealBall hurwitz_em(long s, long num, long den, long M, mpfr_prec_t prec,
                    bool& rem_ok) {
  const long Bterms = 31;  // corrections use B_2..B_62, the remainder B_64
  const auto& B = bernoulli_numbers();

  RealBall sum(prec);
  for (long m = 0; m < M; ++m)
    sum = add(sum, pow_si(RealBall::from_ratio(m * den + num, den, prec), -s));

  RealBall base = RealBall::from_ratio(M * den + num, den, prec);
  RealBall binv = inv(base);
  RealBall binv2 = sqr(binv);
  sum = add(sum, div_si(pow_si(binv, s - 1), s - 1));  // integral term
  sum = add(sum, mul_2exp(pow_si(binv, s), -1));       // f(M)/2

  RealBall p = mul(pow_si(binv, s), binv);  // (M+x)^{-s-1}
  mpz_class poch = s;                        // (s)_{2j-1}
  mpz_class fact = 2;                        // (2j)!
  for (long j = 1; j <= Bterms; ++j) {
    if (j > 1) {
      poch *= (s + 2 * j - 3);
      poch *= (s + 2 * j - 2);
      fact *= (2 * j - 1);
      fact *= (2 * j);
    }
    mpq_class coef = B[static_cast<size_t>(2 * j)] * poch / fact;
    sum = add(sum, mul(RealBall::from_mpq(coef, prec), p));
    p = mul(p, binv2);
  }
  // First omitted term bounds the remainder (completely monotone integrand);
  // doubled for slack.
  poch *= (s + 2 * Bterms - 1);
  poch *= (s + 2 * Bterms);
  fact *= (2 * Bterms + 1);
  fact *= (2 * Bterms + 2);
  mpq_class coefR = abs(B[static_cast<size_t>(2 * Bterms + 2)] * poch / fact);
  RealBall rem = mul(RealBall::from_mpq(coefR, prec), p);
  sum.add_error_abs(rem);
  sum.add_error_abs(rem);

  mpfr_t bound;
  mpfr_init2(bound, kRadiusPrec);
  mpfr_abs(bound, rem.mid(), MPFR_RNDU);
  mpfr_add(bound, bound, rem.rad(), MPFR_RNDU);
  mpfr_mul_2si(bound, bound, 1, MPFR_RNDU);
  rem_ok = mpfr_cmp_ui_2exp(bound, 1, -(prec + 10)) <= 0 || mpfr_zero_p(bound);
  mpfr_clear(bound);
  return sum;
}

}  // namespace

RealBall hurwitz_zeta(long s, long num, long den, mpfr_prec_t prec) {
  if (s < 2) throw std::invalid_argument("hurwitz_zeta: s must be >= 2");
  if (den < 1 || num < 1 || num > den)
    throw std::invalid_argument("hurwitz_zeta: x must be in (0, 1]");
  long M = 16;
  RealBall result(prec);
  for (int attempt = 0; attempt < 10; ++attempt) {
    bool rem_ok = false;
    result = hurwitz_em(s, num, den, M, prec, rem_ok);
    if (rem_ok) break;
    M *= 2;
  }
  return result;
}

std::vector<ComplexBall> polylog_table(long s, long n, mpfr_prec_t prec) {
  if (s < 2) throw std::invalid_argument("polylog: s must be >= 2");
  if (n < 1) throw std::invalid_argument("polylog: order must be positive");
  std::vector<RealBall> hz;
  hz.reserve(static_cast<size_t>(n));
  for (long j = 1; j <= n; ++j) hz.push_back(hurwitz_zeta(s, j, n, prec));
  std::vector<ComplexBall> trig;
  trig.reserve(static_cast<size_t>(n));
  for (long r = 0; r < n; ++r) trig.push_back(unit_circle_point(r, n, prec));
  RealBall nsinv = pow_si(RealBall::from_si(n, prec), -s);
  std::vector<ComplexBall> out;
  out.reserve(static_cast<size_t>(n));
  for (long a = 1; a <= n; ++a) {
    ComplexBall acc(prec);
    for (long j = 1; j <= n; ++j)
      acc = add(acc, mul(trig[static_cast<size_t>((a * j) % n)],
                         hz[static_cast<size_t>(j - 1)]));
    out.push_back(mul(acc, nsinv));
  }
  return out;
}

PolylogValue polylog_root(long s, const RootOfUnity& z, mpfr_prec_t prec) {
  if (s < 2) throw std::invalid_argument("polylog: s must be >= 2");
  const long n = z.order;
  const long a = z.exponent == 0 ? n : z.exponent;
  ComplexBall acc(prec);
  for (long j = 1; j <= n; ++j) {
    RealBall hz = hurwitz_zeta(s, j, n, prec);
    acc = add(acc, mul(unit_circle_point(a * j, n, prec), hz));
  }
  RealBall nsinv = pow_si(RealBall::from_si(n, prec), -s);
  return {s, z, mul(acc, nsinv), "hurwitz"};
}

RealBall real_polylog_component(long k, const ComplexBall& li_value) {
  switch (((k % 4) + 4) % 4) {
    case 0: return li_value.real();
    case 1: return li_value.imag();
    case 2: return neg(li_value.real());
    default: return neg(li_value.imag());
  }
}

RealBall real_polylog(long k, const RootOfUnity& z, mpfr_prec_t prec) {
  if (k < 1) throw std::invalid_argument("real_polylog: k must be >= 1");
  return real_polylog_component(k, polylog_root(k + 1, z, prec).value);
}

ComplexBall direct_series_oracle(long s, const RootOfUnity& z, long terms,
                                 mpfr_prec_t prec) {
  if (s < 2) throw std::invalid_argument("direct_series_oracle: s must be >= 2");
  if (terms < 1) throw std::invalid_argument("direct_series_oracle: need at least one term");
  const long n = z.order;
  std::vector<ComplexBall> trig;
  trig.reserve(static_cast<size_t>(n));
  for (long r = 0; r < n; ++r) trig.push_back(unit_circle_point(r, n, prec));
  ComplexBall acc(prec);
  for (long m = 1; m <= terms; ++m) {
    RealBall ms = pow_si(RealBall::from_si(m, prec), -s);
    acc = add(acc, mul(trig[static_cast<size_t>((z.exponent * m) % n)], ms));
  }
  // Tail of the full series: sum_{m>M} m^{-s} <= 1/((s-1) M^{s-1}).
  RealBall tail = inv(mul_si(pow_si(RealBall::from_si(terms, prec), s - 1), s - 1));
  acc.real().add_error_abs(tail);
  acc.imag().add_error_abs(tail);
  return acc;
}

RealBall bernoulli_component(long k, const RootOfUnity& z, mpfr_prec_t prec) {
  if (k < 1 || k > 6)
    throw std::invalid_argument("bernoulli_component: k outside implemented table");
  const long s = k + 1;
  mpq_class x(z.exponent, z.order);
  x.canonicalize();
  mpq_class bval = bernoulli_poly(s, x);
  // Fourier expansion of Bernoulli polynomials:
  //  sum cos(m theta)/m^s = (-1)^{s/2+1} (2pi)^s B_s(x) / (2 s!)   (s even)
  //  sum sin(m theta)/m^s = (-1)^{(s+1)/2} (2pi)^s B_s(x) / (2 s!) (s odd)
  int sign = (s % 2 == 0) ? ((s / 2 + 1) % 2 == 0 ? 1 : -1)
                          : (((s + 1) / 2) % 2 == 0 ? 1 : -1);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(s));
  mpq_class coef = sign * bval / (2 * mpq_class(fact));
  RealBall two_pi_s = mul_2exp(pow_si(RealBall::pi(prec), s), s);
  return mul(RealBall::from_mpq(coef, prec), two_pi_s);
}

}  // namespace lenscert
