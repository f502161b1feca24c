// e_n(chi), Dirichlet L-values, the factorization e_n(chi) = c(1,chi) L(chi,k+1),
// and the two recursion cases reducing non-aperiodic characters.
#pragma once

#include "lenscert/ball.hpp"
#include "lenscert/characters.hpp"

#include <complex>
#include <string>

namespace lenscert {

struct EValue {
  long modulus;
  std::string label;
  long weight_k;
  ComplexBall value;
  double nonzero_margin;  // lower bound on |e_n(chi)|; negative if undecided
};

struct LValue {
  std::string label;
  long s;
  ComplexBall value;
  std::string method;  // "restricted-series" | "hurwitz"
};

// e_n(chi) = sum_{a in units} Li_{k+1}(zeta_n^a) conj(chi)(a).
EValue e_n_chi(const DirichletCharacter& chi, long k, mpfr_prec_t prec);

enum class LMethod { RestrictedSeries, Hurwitz };

// L(chi, s) = sum_{(m,n)=1} chi(m)/m^s. The Hurwitz method regroups the
// series exactly; the restricted series truncates with the rigorous tail
// bound 1/((s-1) M^{s-1}).
LValue dirichlet_L(const DirichletCharacter& chi, long s, mpfr_prec_t prec,
                   LMethod method);

// Finite Euler product over primes <= prime_bound. Uncertified sanity value;
// never enters certificates.
struct EulerPartial {
  std::complex<double> value;
  double heuristic_error;
};
EulerPartial euler_partial(const DirichletCharacter& chi, long s, long prime_bound);

struct OverlapVerdict {
  VerdictStatus status;
  bool pass;
  double discrepancy;  // midpoint distance between the two routes
};

// e_n(chi) vs c(1,chi) * L(chi, k+1) for aperiodic chi.
OverlapVerdict factorization_check(const DirichletCharacter& chi, long k,
                                   mpfr_prec_t prec);

// Case 1 (p | n'): e_{pn'}(lift chi') = p^{-k} e_{n'}(chi').
OverlapVerdict recursion_case1(const DirichletCharacter& chi_prime, long p,
                               long k, mpfr_prec_t prec);
// Case 2 (p coprime to n'): e_{pn'}(lift chi') = (p^{-k} - chi'(q)) e_{n'}(chi'),
// q the inverse of p mod n'.
OverlapVerdict recursion_case2(const DirichletCharacter& chi_prime, long p,
                               long k, mpfr_prec_t prec);

// Ball for e_n(chi) excluding zero, retrying at doubled precision up to 4x
// the request. Never claims zero: on exhaustion the margin stays negative.
struct NonzeroResult {
  VerdictStatus status;
  EValue evalue;
  long final_prec;
  long escalations;
};
NonzeroResult nonzero_certify(const DirichletCharacter& chi, long k,
                              mpfr_prec_t prec);

}  // namespace lenscert
