// Rigorous enclosures for Hurwitz zeta and the polylogarithm at roots of
// unity, plus the closed-form Bernoulli-polynomial oracle.
#pragma once

#include "lenscert/ball.hpp"
#include "lenscert/modular.hpp"

#include <string>
#include <vector>

namespace lenscert {

// Exact Bernoulli numbers B_0 .. B_64 (write-once shared cache).
const std::vector<mpq_class>& bernoulli_numbers();
// Exact Bernoulli polynomial value B_m(x) for rational x.
mpq_class bernoulli_poly(long m, const mpq_class& x);

// Enclosure of sum_{m>=0} (m + num/den)^{-s} via Euler-Maclaurin with the
// remainder bound folded into the radius. Requires s >= 2, 0 < num/den <= 1.
RealBall hurwitz_zeta(long s, long num, long den, mpfr_prec_t prec);

struct PolylogValue {
  long weight;       // s = k+1 >= 2
  RootOfUnity arg;
  ComplexBall value;
  std::string method;  // "hurwitz" or "direct-series"
};

// Li_s(zeta_n^a) via the Hurwitz-zeta decomposition
// Li_s(zeta_n^a) = n^{-s} sum_{j=1..n} zeta_n^{aj} zeta_H(s, j/n).
PolylogValue polylog_root(long s, const RootOfUnity& z, mpfr_prec_t prec);

// All Li_s(zeta_n^a) for a = 1..n, sharing the Hurwitz evaluations.
std::vector<ComplexBall> polylog_table(long s, long n, mpfr_prec_t prec);

// Real polylogarithm L_{k+1}(z) = Re(i^{-k} Li_{k+1}(z)).
RealBall real_polylog(long k, const RootOfUnity& z, mpfr_prec_t prec);
// Same, selecting from a precomputed Li_{k+1} value.
RealBall real_polylog_component(long k, const ComplexBall& li_value);

// Partial sum sum_{m<=M} z^m/m^s with tail radius 1/((s-1) M^{s-1}).
ComplexBall direct_series_oracle(long s, const RootOfUnity& z, long terms,
                                 mpfr_prec_t prec);

// Closed form for the component of Li_{k+1}(e^{i theta}) that real_polylog
// discards: the cosine sum for even s = k+1, the sine sum for odd s, both
// expressed through the Bernoulli polynomial B_s(theta/2pi). Requires k <= 6.
RealBall bernoulli_component(long k, const RootOfUnity& z, mpfr_prec_t prec);

}  // namespace lenscert
