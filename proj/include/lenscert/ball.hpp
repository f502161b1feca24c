// Midpoint-radius arithmetic on top of MPFR. Every operation returns an
// enclosure that contains the exact result whenever the inputs do.
#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace lenscert {

// Radii are kept at a small fixed precision and always rounded upward.
inline constexpr mpfr_prec_t kRadiusPrec = 32;

struct Precision {
  long bits = 128;
  long guard = 24;
  long working() const { return bits + guard; }
};

// Default precision (bits); honors the LENSCERT_PREC environment variable.
long default_precision_bits();

class RealBall {
 public:
  explicit RealBall(mpfr_prec_t prec = 53);
  RealBall(const RealBall& o);
  RealBall(RealBall&& o) noexcept;
  RealBall& operator=(const RealBall& o);
  RealBall& operator=(RealBall&& o) noexcept;
  ~RealBall();

  static RealBall from_si(long v, mpfr_prec_t prec);
  static RealBall from_ratio(long num, long den, mpfr_prec_t prec);
  static RealBall from_mpq(const mpq_class& q, mpfr_prec_t prec);
  static RealBall pi(mpfr_prec_t prec);
  // Test/oracle constants (MPFR's own implementations).
  static RealBall zeta_ui(unsigned long s, mpfr_prec_t prec);
  static RealBall catalan(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(mid_); }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }
  mpfr_ptr mid() { return mid_; }
  mpfr_ptr rad() { return rad_; }

  bool is_exact() const { return mpfr_zero_p(rad_); }
  bool contains_zero() const;        // |mid| <= rad
  bool excludes_zero() const;        // |mid| >  rad
  bool contains(mpfr_srcptr v) const;
  bool contains(const RealBall& inner) const;  // inner ball subset-of-ball test

  // Lower bound of |x| over the ball (0 if the ball straddles 0).
  double abs_lower_d() const;
  double abs_upper_d() const;
  double rad_d() const;
  double mid_d() const;

  // Enlarge the radius by 2^e.
  void add_error_2exp(long e);
  // Enlarge the radius by the magnitude bound of another ball.
  void add_error_abs(const RealBall& b);
  // Fold the rounding error of the last midpoint operation into the radius.
  void bump_ulp(int ternary);

  std::string mid_decimal(int digits) const;
  void rad_frexp(double& mant, long& exp2) const;

 private:
  mpfr_t mid_;
  mpfr_t rad_;
};

RealBall add(const RealBall& a, const RealBall& b);
RealBall sub(const RealBall& a, const RealBall& b);
RealBall mul(const RealBall& a, const RealBall& b);
RealBall div(const RealBall& a, const RealBall& b);  // requires b.excludes_zero()
RealBall neg(const RealBall& a);
RealBall abs_ball(const RealBall& a);
RealBall mul_si(const RealBall& a, long v);
RealBall div_si(const RealBall& a, long v);
RealBall mul_2exp(const RealBall& a, long e);
RealBall inv(const RealBall& a);
RealBall pow_si(const RealBall& a, long e);
RealBall sqr(const RealBall& a);
RealBall sin_ball(const RealBall& theta);
RealBall cos_ball(const RealBall& theta);
RealBall sqrt_ball(const RealBall& a);  // requires a strictly positive ball

inline RealBall operator+(const RealBall& a, const RealBall& b) { return add(a, b); }
inline RealBall operator-(const RealBall& a, const RealBall& b) { return sub(a, b); }
inline RealBall operator*(const RealBall& a, const RealBall& b) { return mul(a, b); }
inline RealBall operator/(const RealBall& a, const RealBall& b) { return div(a, b); }
inline RealBall operator-(const RealBall& a) { return neg(a); }

// True if the two enclosures intersect (no false negatives).
bool overlap(const RealBall& a, const RealBall& b);
// Upper bound on the distance between the midpoints, as a double.
double midpoint_distance_d(const RealBall& a, const RealBall& b);

class ComplexBall {
 public:
  ComplexBall() = default;
  explicit ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec) {}
  ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}

  const RealBall& real() const { return re_; }
  const RealBall& imag() const { return im_; }
  RealBall& real() { return re_; }
  RealBall& imag() { return im_; }

  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  // |z|^2 as a ball; excludes_zero() on it certifies z != 0.
  RealBall abs_sq() const { return add(sqr(re_), sqr(im_)); }
  bool excludes_zero() const { return abs_sq().excludes_zero(); }
  double rad_d() const { return re_.rad_d() > im_.rad_d() ? re_.rad_d() : im_.rad_d(); }

 private:
  RealBall re_;
  RealBall im_;
};

ComplexBall add(const ComplexBall& a, const ComplexBall& b);
ComplexBall sub(const ComplexBall& a, const ComplexBall& b);
ComplexBall mul(const ComplexBall& a, const ComplexBall& b);
ComplexBall mul(const ComplexBall& a, const RealBall& b);
ComplexBall div(const ComplexBall& a, const ComplexBall& b);
ComplexBall neg(const ComplexBall& a);
ComplexBall conj(const ComplexBall& a);
ComplexBall mul_si(const ComplexBall& a, long v);
ComplexBall div_si(const ComplexBall& a, long v);

inline ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) { return add(a, b); }
inline ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return sub(a, b); }
inline ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) { return mul(a, b); }
inline ComplexBall operator-(const ComplexBall& a) { return neg(a); }

bool overlap(const ComplexBall& a, const ComplexBall& b);
double midpoint_distance_d(const ComplexBall& a, const ComplexBall& b);

// Enclosure of e^{2 pi i num/den}. Quarter-turn arguments are exact.
ComplexBall unit_circle_point(long num, long den, mpfr_prec_t prec);

// Raised when a verdict cannot be decided at the precision cap.
class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lenscert
