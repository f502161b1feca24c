#include "lenscert/ball.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace lenscert {

long default_precision_bits() {
  static const long bits = [] {
    if (const char* s = std::getenv("LENSCERT_PREC")) {
      long v = std::atol(s);
      if (v >= 53) return v;
    }
    return 128L;
  }();
  return bits;
}

RealBall::RealBall(mpfr_prec_t prec) {
  mpfr_init2(mid_, prec);
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

RealBall::RealBall(const RealBall& o) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

RealBall::RealBall(RealBall&& o) noexcept {
  mpfr_init2(mid_, 53);
  mpfr_init2(rad_, kRadiusPrec);
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
}

RealBall& RealBall::operator=(const RealBall& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
  }
  return *this;
}

RealBall& RealBall::operator=(RealBall&& o) noexcept {
  if (this != &o) {
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
  }
  return *this;
}

RealBall::~RealBall() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void RealBall::bump_ulp(int ternary) {
  if (ternary == 0 || !mpfr_regular_p(mid_)) return;
  // One ulp of the midpoint covers the half-ulp rounding error with slack.
  long e = mpfr_get_exp(mid_) - mpfr_get_prec(mid_);
  add_error_2exp(e);
}

void RealBall::add_error_2exp(long e) {
  mpfr_t t;
  mpfr_init2(t, kRadiusPrec);
  mpfr_set_ui_2exp(t, 1, e, MPFR_RNDU);
  mpfr_add(rad_, rad_, t, MPFR_RNDU);
  mpfr_clear(t);
}

void RealBall::add_error_abs(const RealBall& b) {
  mpfr_t t;
  mpfr_init2(t, kRadiusPrec);
  mpfr_abs(t, b.mid_, MPFR_RNDU);
  mpfr_add(t, t, b.rad_, MPFR_RNDU);
  mpfr_add(rad_, rad_, t, MPFR_RNDU);
  mpfr_clear(t);
}

RealBall RealBall::from_si(long v, mpfr_prec_t prec) {
  RealBall r(prec);
  int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

RealBall RealBall::from_ratio(long num, long den, mpfr_prec_t prec) {
  if (den == 0) throw std::invalid_argument("from_ratio: zero denominator");
  RealBall r(prec);
  int t = mpfr_set_si(r.mid_, num, MPFR_RNDN);
  r.bump_ulp(t);
  t = mpfr_div_si(r.mid_, r.mid_, den, MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

RealBall RealBall::from_mpq(const mpq_class& q, mpfr_prec_t prec) {
  RealBall r(prec);
  int t = mpfr_set_q(r.mid_, q.get_mpq_t(), MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

RealBall RealBall::pi(mpfr_prec_t prec) {
  RealBall r(prec);
  int t = mpfr_const_pi(r.mid_, MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

RealBall RealBall::zeta_ui(unsigned long s, mpfr_prec_t prec) {
  RealBall r(prec);
  int t = mpfr_zeta_ui(r.mid_, s, MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

RealBall RealBall::catalan(mpfr_prec_t prec) {
  RealBall r(prec);
  int t = mpfr_const_catalan(r.mid_, MPFR_RNDN);
  r.bump_ulp(t);
  return r;
}

bool RealBall::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool RealBall::excludes_zero() const { return mpfr_cmpabs(mid_, rad_) > 0; }

bool RealBall::contains(mpfr_srcptr v) const {
  mpfr_t d;
  mpfr_init2(d, mpfr_get_prec(mid_) + 64);
  mpfr_sub(d, mid_, v, MPFR_RNDU);
  mpfr_abs(d, d, MPFR_RNDU);
  bool ok = mpfr_cmp(d, rad_) <= 0;
  mpfr_clear(d);
  return ok;
}

bool RealBall::contains(const RealBall& inner) const {
  // [inner.mid +- inner.rad] subset of [mid +- rad]
  mpfr_t d;
  mpfr_init2(d, mpfr_get_prec(mid_) + 64);
  mpfr_sub(d, mid_, inner.mid_, MPFR_RNDU);
  mpfr_abs(d, d, MPFR_RNDU);
  mpfr_add(d, d, inner.rad_, MPFR_RNDU);
  bool ok = mpfr_cmp(d, rad_) <= 0;
  mpfr_clear(d);
  return ok;
}

double RealBall::abs_lower_d() const {
  mpfr_t t;
  mpfr_init2(t, kRadiusPrec);
  mpfr_abs(t, mid_, MPFR_RNDD);
  mpfr_sub(t, t, rad_, MPFR_RNDD);
  double v = mpfr_get_d(t, MPFR_RNDD);
  mpfr_clear(t);
  return v < 0 ? 0.0 : v;
}

double RealBall::abs_upper_d() const {
  mpfr_t t;
  mpfr_init2(t, kRadiusPrec);
  mpfr_abs(t, mid_, MPFR_RNDU);
  mpfr_add(t, t, rad_, MPFR_RNDU);
  double v = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(t);
  return v;
}

double RealBall::rad_d() const { return mpfr_get_d(rad_, MPFR_RNDU); }
double RealBall::mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }

std::string RealBall::mid_decimal(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits, mid_);
  return std::string(buf.data());
}

void RealBall::rad_frexp(double& mant, long& exp2) const {
  if (mpfr_zero_p(rad_)) {
    mant = 0.0;
    exp2 = 0;
    return;
  }
  exp2 = mpfr_get_exp(rad_);
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set(t, rad_, MPFR_RNDU);
  mpfr_div_2si(t, t, exp2, MPFR_RNDU);
  mant = mpfr_get_d(t, MPFR_RNDU);  // in [0.5, 1]
  mpfr_clear(t);
}

namespace {

mpfr_prec_t out_prec(const RealBall& a, const RealBall& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}

// |x.mid| + x.rad rounded up, at radius precision.
void abs_bound(mpfr_ptr out, const RealBall& x) {
  mpfr_abs(out, x.mid(), MPFR_RNDU);
  mpfr_add(out, out, x.rad(), MPFR_RNDU);
}

}  // namespace

RealBall add(const RealBall& a, const RealBall& b) {
  RealBall r(out_prec(a, b));
  int t = mpfr_add(r.mid(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(r.rad(), a.rad(), b.rad(), MPFR_RNDU);
  r.bump_ulp(t);
  return r;
}

RealBall sub(const RealBall& a, const RealBall& b) {
  RealBall r(out_prec(a, b));
  int t = mpfr_sub(r.mid(), a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(r.rad(), a.rad(), b.rad(), MPFR_RNDU);
  r.bump_ulp(t);
  return r;
}

RealBall mul(const RealBall& a, const RealBall& b) {
  RealBall r(out_prec(a, b));
  int t = mpfr_mul(r.mid(), a.mid(), b.mid(), MPFR_RNDN);
  // rad = |a|*rb + |b|*ra + ra*rb, all upward.
  mpfr_t am, bm, acc;
  mpfr_inits2(kRadiusPrec, am, bm, acc, (mpfr_ptr)nullptr);
  mpfr_abs(am, a.mid(), MPFR_RNDU);
  mpfr_abs(bm, b.mid(), MPFR_RNDU);
  mpfr_mul(acc, am, b.rad(), MPFR_RNDU);
  mpfr_fma(acc, bm, a.rad(), acc, MPFR_RNDU);
  mpfr_fma(acc, a.rad(), b.rad(), acc, MPFR_RNDU);
  mpfr_set(r.rad(), acc, MPFR_RNDU);
  mpfr_clears(am, bm, acc, (mpfr_ptr)nullptr);
  r.bump_ulp(t);
  return r;
}

RealBall sqr(const RealBall& a) { return mul(a, a); }

RealBall div(const RealBall& a, const RealBall& b) {
  if (!b.excludes_zero()) throw std::domain_error("ball div: divisor straddles zero");
  RealBall r(out_prec(a, b));
  int t = mpfr_div(r.mid(), a.mid(), b.mid(), MPFR_RNDN);
  // |a/b - am/bm| <= (ra*|bm| + |am|*rb) / (|bm| * (|bm|-rb))
  mpfr_t am, bm, lo, num, den;
  mpfr_inits2(kRadiusPrec, am, bm, lo, num, den, (mpfr_ptr)nullptr);
  mpfr_abs(am, a.mid(), MPFR_RNDU);
  mpfr_abs(bm, b.mid(), MPFR_RNDU);
  mpfr_mul(num, a.rad(), bm, MPFR_RNDU);
  mpfr_fma(num, am, b.rad(), num, MPFR_RNDU);
  mpfr_abs(lo, b.mid(), MPFR_RNDD);
  mpfr_sub(lo, lo, b.rad(), MPFR_RNDD);
  mpfr_abs(den, b.mid(), MPFR_RNDD);
  mpfr_mul(den, den, lo, MPFR_RNDD);
  mpfr_div(num, num, den, MPFR_RNDU);
  mpfr_set(r.rad(), num, MPFR_RNDU);
  mpfr_clears(am, bm, lo, num, den, (mpfr_ptr)nullptr);
  r.bump_ulp(t);
  return r;
}

RealBall neg(const RealBall& a) {
  RealBall r(a);
  mpfr_neg(r.mid(), r.mid(), MPFR_RNDN);
  return r;
}

RealBall abs_ball(const RealBall& a) {
  RealBall r(a);
  mpfr_abs(r.mid(), r.mid(), MPFR_RNDN);
  return r;
}

RealBall mul_si(const RealBall& a, long v) {
  RealBall r(a.prec());
  int t = mpfr_mul_si(r.mid(), a.mid(), v, MPFR_RNDN);
  mpfr_t av;
  mpfr_init2(av, kRadiusPrec);
  mpfr_set_si(av, v < 0 ? -v : v, MPFR_RNDU);
  mpfr_mul(r.rad(), a.rad(), av, MPFR_RNDU);
  mpfr_clear(av);
  r.bump_ulp(t);
  return r;
}

RealBall div_si(const RealBall& a, long v) {
  if (v == 0) throw std::domain_error("ball div_si: zero divisor");
  RealBall r(a.prec());
  int t = mpfr_div_si(r.mid(), a.mid(), v, MPFR_RNDN);
  mpfr_t av;
  mpfr_init2(av, kRadiusPrec);
  mpfr_set_si(av, v < 0 ? -v : v, MPFR_RNDD);
  mpfr_div(r.rad(), a.rad(), av, MPFR_RNDU);
  mpfr_clear(av);
  r.bump_ulp(t);
  return r;
}

RealBall mul_2exp(const RealBall& a, long e) {
  RealBall r(a);
  mpfr_mul_2si(r.mid(), r.mid(), e, MPFR_RNDN);
  mpfr_mul_2si(r.rad(), r.rad(), e, MPFR_RNDU);
  return r;
}

RealBall inv(const RealBall& a) { return div(RealBall::from_si(1, a.prec()), a); }

RealBall pow_si(const RealBall& a, long e) {
  if (e == 0) return RealBall::from_si(1, a.prec());
  if (e < 0) return inv(pow_si(a, -e));
  RealBall acc = RealBall::from_si(1, a.prec());
  RealBall base = a;
  unsigned long ue = static_cast<unsigned long>(e);
  while (ue > 0) {
    if (ue & 1) acc = mul(acc, base);
    ue >>= 1;
    if (ue > 0) base = sqr(base);
  }
  return acc;
}

namespace {

RealBall trig(const RealBall& theta, bool is_sin) {
  RealBall r(theta.prec());
  int t = is_sin ? mpfr_sin(r.mid(), theta.mid(), MPFR_RNDN)
                 : mpfr_cos(r.mid(), theta.mid(), MPFR_RNDN);
  // Lipschitz constant 1 propagates the argument radius unchanged.
  mpfr_set(r.rad(), theta.rad(), MPFR_RNDU);
  r.bump_ulp(t);
  return r;
}

}  // namespace

RealBall sin_ball(const RealBall& theta) { return trig(theta, true); }
RealBall cos_ball(const RealBall& theta) { return trig(theta, false); }

RealBall sqrt_ball(const RealBall& a) {
  if (!a.excludes_zero() || mpfr_sgn(a.mid()) < 0)
    throw std::domain_error("ball sqrt: argument not strictly positive");
  RealBall r(a.prec());
  int t = mpfr_sqrt(r.mid(), a.mid(), MPFR_RNDN);
  // |sqrt(x) - sqrt(m)| <= rad / (2 sqrt(lower))
  mpfr_t lo;
  mpfr_init2(lo, kRadiusPrec);
  mpfr_sub(lo, a.mid(), a.rad(), MPFR_RNDD);
  mpfr_sqrt(lo, lo, MPFR_RNDD);
  mpfr_mul_2si(lo, lo, 1, MPFR_RNDD);
  mpfr_div(lo, a.rad(), lo, MPFR_RNDU);
  mpfr_set(r.rad(), lo, MPFR_RNDU);
  mpfr_clear(lo);
  r.bump_ulp(t);
  return r;
}

bool overlap(const RealBall& a, const RealBall& b) {
  mpfr_t d, s;
  mpfr_init2(d, out_prec(a, b) + 64);
  mpfr_init2(s, kRadiusPrec);
  mpfr_sub(d, a.mid(), b.mid(), MPFR_RNDD);
  mpfr_abs(d, d, MPFR_RNDD);
  mpfr_add(s, a.rad(), b.rad(), MPFR_RNDU);
  bool ok = mpfr_cmp(d, s) <= 0;
  mpfr_clear(d);
  mpfr_clear(s);
  return ok;
}

double midpoint_distance_d(const RealBall& a, const RealBall& b) {
  mpfr_t d;
  mpfr_init2(d, out_prec(a, b) + 64);
  mpfr_sub(d, a.mid(), b.mid(), MPFR_RNDU);
  mpfr_abs(d, d, MPFR_RNDU);
  double v = mpfr_get_d(d, MPFR_RNDU);
  mpfr_clear(d);
  return v;
}

ComplexBall add(const ComplexBall& a, const ComplexBall& b) {
  return {add(a.real(), b.real()), add(a.imag(), b.imag())};
}

ComplexBall sub(const ComplexBall& a, const ComplexBall& b) {
  return {sub(a.real(), b.real()), sub(a.imag(), b.imag())};
}

ComplexBall mul(const ComplexBall& a, const ComplexBall& b) {
  return {sub(mul(a.real(), b.real()), mul(a.imag(), b.imag())),
          add(mul(a.real(), b.imag()), mul(a.imag(), b.real()))};
}

ComplexBall mul(const ComplexBall& a, const RealBall& b) {
  return {mul(a.real(), b), mul(a.imag(), b)};
}

ComplexBall div(const ComplexBall& a, const ComplexBall& b) {
  RealBall d = b.abs_sq();
  ComplexBall num = mul(a, conj(b));
  return {div(num.real(), d), div(num.imag(), d)};
}

ComplexBall neg(const ComplexBall& a) { return {neg(a.real()), neg(a.imag())}; }

ComplexBall conj(const ComplexBall& a) { return {a.real(), neg(a.imag())}; }

ComplexBall mul_si(const ComplexBall& a, long v) {
  return {mul_si(a.real(), v), mul_si(a.imag(), v)};
}

ComplexBall div_si(const ComplexBall& a, long v) {
  return {div_si(a.real(), v), div_si(a.imag(), v)};
}

bool overlap(const ComplexBall& a, const ComplexBall& b) {
  return overlap(a.real(), b.real()) && overlap(a.imag(), b.imag());
}

double midpoint_distance_d(const ComplexBall& a, const ComplexBall& b) {
  double dr = midpoint_distance_d(a.real(), b.real());
  double di = midpoint_distance_d(a.imag(), b.imag());
  return std::sqrt(dr * dr + di * di);
}

ComplexBall unit_circle_point(long num, long den, mpfr_prec_t prec) {
  if (den <= 0) throw std::invalid_argument("unit_circle_point: order must be positive");
  long r = ((num % den) + den) % den;
  // Quarter turns are exact.
  if (4 * r % den == 0) {
    long q = 4 * r / den;  // 0..3
    long re = (q == 0) ? 1 : (q == 2) ? -1 : 0;
    long im = (q == 1) ? 1 : (q == 3) ? -1 : 0;
    return {RealBall::from_si(re, prec), RealBall::from_si(im, prec)};
  }
  RealBall theta = mul(RealBall::pi(prec), RealBall::from_ratio(2 * r, den, prec));
  return {cos_ball(theta), sin_ball(theta)};
}

}  // namespace lenscert
