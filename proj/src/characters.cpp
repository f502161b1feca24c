#include "lenscert/characters.hpp"

#include "lenscert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lenscert {

namespace {

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

}  // namespace

DirichletCharacter::DirichletCharacter(const UnitGroup& group,
                                       std::vector<long> gen_exponents)
    : modulus_(group.modulus) {
  if (gen_exponents.size() != group.generators.size())
    throw std::invalid_argument("character: exponent vector size mismatch");
  long D = 1;
  for (long d : group.generator_orders) D = lcm_long(D, d);
  exp_by_residue_.assign(static_cast<size_t>(modulus_), -1);
  for (long u : group.elements) {
    std::vector<long> t = group.exponents_of(u);
    long e = 0;
    for (size_t i = 0; i < t.size(); ++i) {
      long di = group.generator_orders[i];
      e = (e + gen_exponents[i] % di * t[i] % D * (D / di)) % D;
    }
    exp_by_residue_[static_cast<size_t>(u % modulus_)] = e;
  }
  order_ = D;
  normalize();
}

DirichletCharacter::DirichletCharacter(long modulus, long common_order,
                                       std::vector<long> exponents_by_residue)
    : modulus_(modulus), order_(common_order),
      exp_by_residue_(std::move(exponents_by_residue)) {
  normalize();
}

void DirichletCharacter::normalize() {
  // Reduce the common order to the exact character order.
  long g = order_;
  for (long e : exp_by_residue_)
    if (e > 0) g = gcd_long(g, e);
  if (g > 1) {
    for (long& e : exp_by_residue_)
      if (e > 0) e /= g;
    order_ /= g;
  }
  if (order_ < 1) order_ = 1;
  // Generator exponents for the canonical label.
  UnitGroup grp = unit_group(modulus_);
  gen_exponents_.clear();
  for (size_t i = 0; i < grp.generators.size(); ++i) {
    long di = grp.generator_orders[i];
    long e = exponent_at(grp.generators[i]);
    // chi(g_i) = zeta_order^e has order dividing d_i, so e*d_i/order is exact.
    gen_exponents_.push_back(e * di / order_);
  }
}

long DirichletCharacter::exponent_at(long a) const {
  long u = ((a % modulus_) + modulus_) % modulus_;
  long e = exp_by_residue_[static_cast<size_t>(u)];
  if (e < 0) throw std::domain_error("character evaluated at non-unit");
  return e;
}

ComplexBall DirichletCharacter::value_ball(long a, mpfr_prec_t prec) const {
  return unit_circle_point(exponent_at(a), order_, prec);
}

std::string DirichletCharacter::label() const {
  std::ostringstream os;
  os << "chi_" << modulus_ << "(";
  for (size_t i = 0; i < gen_exponents_.size(); ++i) {
    if (i) os << ",";
    os << gen_exponents_[i];
  }
  os << ")";
  return os.str();
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<long> e = exp_by_residue_;
  for (long& v : e)
    if (v > 0) v = order_ - v;
  return {modulus_, order_, std::move(e)};
}

DirichletCharacter DirichletCharacter::pointwise_product(
    const DirichletCharacter& o) const {
  if (modulus_ != o.modulus_) throw std::invalid_argument("product: modulus mismatch");
  long L = lcm_long(order_, o.order_);
  std::vector<long> e(static_cast<size_t>(modulus_), -1);
  for (long u = 0; u < modulus_; ++u) {
    if (exp_by_residue_[static_cast<size_t>(u)] < 0) continue;
    e[static_cast<size_t>(u)] =
        (exp_by_residue_[static_cast<size_t>(u)] * (L / order_) +
         o.exp_by_residue_[static_cast<size_t>(u)] * (L / o.order_)) % L;
  }
  return {modulus_, L, std::move(e)};
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
  return modulus_ == o.modulus_ && order_ == o.order_ &&
         exp_by_residue_ == o.exp_by_residue_;
}

CharacterTable enumerate_characters(long n) {
  CharacterTable t;
  t.modulus = n;
  t.group = unit_group(n);
  std::vector<long> idx(t.group.generators.size(), 0);
  long total = t.group.phi();
  for (long c = 0; c < total; ++c) {
    t.characters.emplace_back(t.group, idx);
    for (size_t i = 0; i < idx.size(); ++i) {
      if (++idx[i] < t.group.generator_orders[i]) break;
      idx[i] = 0;
    }
  }
  std::sort(t.characters.begin(), t.characters.end(),
            [](const DirichletCharacter& a, const DirichletCharacter& b) {
              return a.generator_exponents() < b.generator_exponents();
            });
  return t;
}

PeriodInfo minimal_period(const DirichletCharacter& chi) {
  const long n = chi.modulus();
  for (long q = 1; q <= n; ++q) {
    if (n % q != 0) continue;
    // chi factors through (Z/q)* iff chi is constant on unit classes mod q.
    bool factors = true;
    for (long a = 1; a <= n && factors; ++a) {
      if (gcd_long(a, n) != 1) continue;
      for (long b = a + q; b <= n; b += q) {
        if (gcd_long(b, n) != 1) continue;
        if (chi.exponent_at(a) != chi.exponent_at(b)) { factors = false; break; }
      }
    }
    if (!factors) continue;
    PeriodInfo info;
    info.minimal_period = q;
    info.aperiodic = (q == n);
    if (q < n) {
      std::vector<long> e(static_cast<size_t>(q), -1);
      for (long u = 1; u <= q; ++u) {
        if (gcd_long(u, q) != 1) continue;
        long lift = -1;
        for (long a = u; a <= u + n; a += q)
          if (gcd_long(a, n) == 1) { lift = a; break; }
        e[static_cast<size_t>(u % q)] = chi.exponent_at(lift);
      }
      info.restricted = DirichletCharacter(q, chi.order(), std::move(e));
    }
    return info;
  }
  throw std::logic_error("minimal_period: unreachable");
}

DirichletCharacter lift_character(const DirichletCharacter& chi_prime, long n) {
  const long np = chi_prime.modulus();
  if (n % np != 0) throw std::invalid_argument("lift_character: modulus not a multiple");
  std::vector<long> e(static_cast<size_t>(n), -1);
  for (long a = 1; a <= n; ++a)
    if (gcd_long(a, n) == 1)
      e[static_cast<size_t>(a % n)] = chi_prime.exponent_at(a % np == 0 ? np : a % np);
  return {n, chi_prime.order(), std::move(e)};
}

ComplexBall char_sum_c(const ModInt& m, const DirichletCharacter& chi,
                       mpfr_prec_t prec) {
  const long n = chi.modulus();
  if (m.modulus != n) throw std::invalid_argument("char_sum_c: modulus mismatch");
  const long d = chi.order();
  const long L = n / gcd_long(n, d) * d;
  UnitGroup grp = unit_group(n);
  ComplexBall acc(prec);
  for (long a : grp.elements) {
    // zeta_n^{ma} * conj(chi)(a) as a single exact root of unity.
    long t = ((m.value * a % n) * (L / n) - chi.exponent_at(a) * (L / d)) % L;
    acc = add(acc, unit_circle_point(t, L, prec));
  }
  return acc;
}

TriangleVerdict triangle_check(const DirichletCharacter& chi, mpfr_prec_t prec) {
  PeriodInfo pi = minimal_period(chi);
  if (!pi.aperiodic) throw std::invalid_argument("triangle_check: chi must be aperiodic");
  const long n = chi.modulus();
  ComplexBall c1 = char_sum_c(ModInt(1, n), chi, prec);
  TriangleVerdict v{VerdictStatus::Certified, true, 0.0};
  RealBall c1sq = c1.abs_sq();
  if (!c1sq.excludes_zero()) {
    v.status = VerdictStatus::Undecided;
    v.pass = false;
    return v;
  }
  v.c1_exclusion_margin = std::sqrt(c1sq.abs_lower_d());
  for (long m = 1; m <= n; ++m) {
    ComplexBall cm = char_sum_c(ModInt(m, n), chi, prec);
    if (gcd_long(m, n) != 1) {
      if (!cm.contains_zero()) v.pass = false;
    } else {
      ComplexBall rhs = mul(c1, chi.value_ball(m, prec));
      if (!overlap(cm, rhs)) v.pass = false;
    }
  }
  return v;
}

CharMatrixRankResult char_sum_matrix_rank(long n, mpfr_prec_t prec) {
  CharacterTable table = enumerate_characters(n);
  const long phi = table.group.phi();
  ComplexBallMat C(n, phi, prec);
  for (long m = 1; m <= n; ++m)
    for (long j = 0; j < phi; ++j)
      C.at(m - 1, j) = char_sum_c(ModInt(m, n), table.characters[static_cast<size_t>(j)], prec);
  CharMatrixRankResult res{VerdictStatus::Undecided, 0, {}, 0.0};
  auto minor = select_minor(C, phi);
  if (!minor) return res;
  auto det = det_ball(submatrix(C, *minor));
  if (!det || !det->excludes_zero()) return res;
  res.status = VerdictStatus::Certified;
  res.rank = phi;
  for (long r : minor->rows) res.witness_rows.push_back(r + 1);  // back to m values
  res.det_margin = det->abs_sq().abs_lower_d();
  return res;
}

}  // namespace lenscert
