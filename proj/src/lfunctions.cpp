#include "lenscert/lfunctions.hpp"

#include "lenscert/polylog.hpp"

#include <cmath>
#include <stdexcept>

namespace lenscert {

EValue e_n_chi(const DirichletCharacter& chi, long k, mpfr_prec_t prec) {
  if (k < 1) throw std::invalid_argument("e_n_chi: k must be >= 1");
  const long n = chi.modulus();
  std::vector<ComplexBall> li = polylog_table(k + 1, n, prec);
  UnitGroup grp = unit_group(n);
  ComplexBall acc(prec);
  DirichletCharacter bar = chi.conjugate();
  for (long a : grp.elements)
    acc = add(acc, mul(li[static_cast<size_t>(a - 1)], bar.value_ball(a, prec)));
  EValue e{n, chi.label(), k, acc, -1.0};
  RealBall sq = acc.abs_sq();
  if (sq.excludes_zero()) e.nonzero_margin = std::sqrt(sq.abs_lower_d());
  return e;
}

LValue dirichlet_L(const DirichletCharacter& chi, long s, mpfr_prec_t prec,
                   LMethod method) {
  if (s < 2) throw std::invalid_argument("dirichlet_L: s must be >= 2");
  const long n = chi.modulus();
  if (method == LMethod::Hurwitz) {
    // Exact regrouping by residue: n^{-s} sum_{a in units} chi(a) zeta_H(s, a/n).
    UnitGroup grp = unit_group(n);
    ComplexBall acc(prec);
    for (long a : grp.elements) {
      RealBall hz = hurwitz_zeta(s, a, n, prec);
      acc = add(acc, mul(chi.value_ball(a, prec), hz));
    }
    RealBall nsinv = pow_si(RealBall::from_si(n, prec), -s);
    return {chi.label(), s, mul(acc, nsinv), "hurwitz"};
  }
  // Restricted series with rigorous tail radius.
  const long M = 4000;
  ComplexBall acc(prec);
  for (long m = 1; m <= M; ++m) {
    if (gcd_long(m, n) != 1) continue;
    RealBall ms = pow_si(RealBall::from_si(m, prec), -s);
    acc = add(acc, mul(chi.value_ball(m, prec), ms));
  }
  RealBall tail = inv(mul_si(pow_si(RealBall::from_si(M, prec), s - 1), s - 1));
  acc.real().add_error_abs(tail);
  acc.imag().add_error_abs(tail);
  return {chi.label(), s, acc, "restricted-series"};
}

EulerPartial euler_partial(const DirichletCharacter& chi, long s, long prime_bound) {
  const long n = chi.modulus();
  std::complex<double> prod = 1.0;
  for (long p = 2; p <= prime_bound; ++p) {
    if (!is_prime(p)) continue;
    if (gcd_long(p, n) != 1) continue;  // chi(p) = 0
    long e = chi.exponent_at(p);
    double ang = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(chi.order());
    std::complex<double> chip(std::cos(ang), std::sin(ang));
    prod /= (1.0 - chip * std::pow(static_cast<double>(p), -static_cast<double>(s)));
  }
  // Heuristic: omitted primes contribute roughly the tail of sum p^{-s}.
  double err = prime_bound >= 2
                   ? std::pow(static_cast<double>(prime_bound), 1.0 - static_cast<double>(s)) /
                         (static_cast<double>(s) - 1.0)
                   : 1.0;
  return {prod, err};
}

namespace {

OverlapVerdict compare_balls(const ComplexBall& lhs, const ComplexBall& rhs) {
  OverlapVerdict v{VerdictStatus::Certified, false, 0.0};
  v.pass = overlap(lhs, rhs);
  v.discrepancy = midpoint_distance_d(lhs, rhs);
  return v;
}

}  // namespace

OverlapVerdict factorization_check(const DirichletCharacter& chi, long k,
                                   mpfr_prec_t prec) {
  if (!minimal_period(chi).aperiodic)
    throw std::invalid_argument("factorization_check: chi must be aperiodic");
  ComplexBall lhs = e_n_chi(chi, k, prec).value;
  ComplexBall c1 = char_sum_c(ModInt(1, chi.modulus()), chi, prec);
  ComplexBall L = dirichlet_L(chi, k + 1, prec, LMethod::Hurwitz).value;
  return compare_balls(lhs, mul(c1, L));
}

OverlapVerdict recursion_case1(const DirichletCharacter& chi_prime, long p,
                               long k, mpfr_prec_t prec) {
  const long np = chi_prime.modulus();
  if (!is_prime(p) || np % p != 0)
    throw std::invalid_argument("recursion_case1: requires prime p dividing n'");
  const long n = p * np;
  ComplexBall lhs = e_n_chi(lift_character(chi_prime, n), k, prec).value;
  ComplexBall rhs = mul(e_n_chi(chi_prime, k, prec).value,
                        pow_si(RealBall::from_si(p, prec), -k));
  return compare_balls(lhs, rhs);
}

OverlapVerdict recursion_case2(const DirichletCharacter& chi_prime, long p,
                               long k, mpfr_prec_t prec) {
  const long np = chi_prime.modulus();
  if (!is_prime(p) || gcd_long(p, np) != 1)
    throw std::invalid_argument("recursion_case2: requires prime p coprime to n'");
  const long n = p * np;
  ComplexBall lhs = e_n_chi(lift_character(chi_prime, n), k, prec).value;
  long q = np == 1 ? 1 : mod_inverse(p, np);
  ComplexBall factor = sub(
      ComplexBall(pow_si(RealBall::from_si(p, prec), -k), RealBall(prec)),
      chi_prime.value_ball(q, prec));
  ComplexBall rhs = mul(factor, e_n_chi(chi_prime, k, prec).value);
  return compare_balls(lhs, rhs);
}

NonzeroResult nonzero_certify(const DirichletCharacter& chi, long k,
                              mpfr_prec_t prec) {
  NonzeroResult res{VerdictStatus::Undecided, EValue{}, prec, 0};
  for (mpfr_prec_t p = prec; p <= 4 * prec; p *= 2) {
    res.evalue = e_n_chi(chi, k, p);
    res.final_prec = p;
    if (res.evalue.nonzero_margin > 0) {
      res.status = VerdictStatus::Certified;
      return res;
    }
    ++res.escalations;
  }
  --res.escalations;  // the last attempt is not an escalation beyond the cap
  return res;
}

}  // namespace lenscert
