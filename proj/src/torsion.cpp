#include "lenscert/torsion.hpp"

#include "lenscert/lfunctions.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace lenscert {

TorsionMatrixT::TorsionMatrixT(long n, long k, mpfr_prec_t prec)
    : n_(n), k_(k), prec_(prec) {
  if (n < 1 || k < 1) throw std::invalid_argument("TorsionMatrixT: need n >= 1, k >= 1");
  table_ = polylog_table(k + 1, n, prec);
}

TorsionMatrixT build_T(long n, long k, mpfr_prec_t prec) { return {n, k, prec}; }

const ComplexBall& TorsionMatrixT::value_at_root(long r) const {
  long rr = ((r % n_) + n_) % n_;
  if (rr == 0) rr = n_;
  return table_[static_cast<size_t>(rr - 1)];
}

const ComplexBall& TorsionMatrixT::at(long a, long b) const {
  return value_at_root(a * b);
}

double TorsionMatrixT::max_entry_radius() const {
  double m = 0;
  for (const auto& z : table_) m = std::max(m, z.rad_d());
  return m;
}

ComplexBallMat TorsionMatrixT::full() const {
  ComplexBallMat m(n_, n_, prec_);
  for (long a = 1; a <= n_; ++a)
    for (long b = 1; b <= n_; ++b) m.at(a - 1, b - 1) = at(a, b);
  return m;
}

RealBallMat TorsionMatrixT::real_part() const {
  RealBallMat m(n_, n_, prec_);
  for (long a = 1; a <= n_; ++a)
    for (long b = 1; b <= n_; ++b) m.at(a - 1, b - 1) = at(a, b).real();
  return m;
}

RealBallMat TorsionMatrixT::imag_part() const {
  RealBallMat m(n_, n_, prec_);
  for (long a = 1; a <= n_; ++a)
    for (long b = 1; b <= n_; ++b) m.at(a - 1, b - 1) = at(a, b).imag();
  return m;
}

ComplexBallMat TorsionMatrixT::unit_submatrix() const {
  UnitGroup grp = unit_group(n_);
  long phi = grp.phi();
  ComplexBallMat m(phi, phi, prec_);
  for (long i = 0; i < phi; ++i)
    for (long j = 0; j < phi; ++j)
      m.at(i, j) = at(grp.elements[static_cast<size_t>(i)],
                      grp.elements[static_cast<size_t>(j)]);
  return m;
}

RealBall lens_torsion(long n, long k, long zeta_exponent, const RealBall& ch,
                      mpfr_prec_t prec) {
  // tau = -n^k L_{k+1}(zeta_n^b) ch
  RealBall L = real_polylog(k, RootOfUnity(zeta_exponent, n), prec);
  RealBall nk = pow_si(RealBall::from_si(n, prec), k);
  return neg(mul(mul(nk, L), ch));
}

RealBall hcob_pairing(long n, long k, long a, long b, const RealBall& ch,
                      mpfr_prec_t prec) {
  return neg(lens_torsion(n, k, a * b, ch, prec));
}

ConjugationVerdict conjugation_relation(const TorsionMatrixT& T) {
  const long n = T.n();
  ConjugationVerdict v{VerdictStatus::Certified, true};
  for (long a = 1; a <= n; ++a)
    for (long b = 1; b <= n; ++b) {
      // (T S)_{a,b} = T_{a, n-b}
      long b2 = (n - b) % n == 0 ? n : n - b;
      if (!overlap(conj(T.at(a, b)), T.at(a, b2))) v.pass = false;
    }
  return v;
}

DeterminantVerdict certify_T_invertible(const TorsionMatrixT& T) {
  DeterminantVerdict v{VerdictStatus::Undecided, false, 0.0, ComplexBall(T.prec())};
  auto det = det_ball(T.full());
  if (!det) return v;
  v.det = *det;
  RealBall sq = det->abs_sq();
  if (!sq.excludes_zero()) return v;
  v.status = VerdictStatus::Certified;
  v.pass = true;
  v.abs_lower = std::sqrt(sq.abs_lower_d());
  return v;
}

UnitSubmatrixVerdict unit_submatrix_check(long n, long k, mpfr_prec_t prec) {
  UnitSubmatrixVerdict v{VerdictStatus::Undecided, false, false, 0.0};
  TorsionMatrixT T(n, k, prec);
  auto det = det_ball(T.unit_submatrix());
  if (!det) return v;
  RealBall det_sq = det->abs_sq();
  if (!det_sq.excludes_zero()) return v;
  // Character route: |det|^2 = prod_chi |e_n(chi)|^2.
  CharacterTable table = enumerate_characters(n);
  RealBall prod_sq = RealBall::from_si(1, prec);
  for (const auto& chi : table.characters)
    prod_sq = mul(prod_sq, e_n_chi(chi, k, prec).value.abs_sq());
  v.routes_agree = overlap(det_sq, prod_sq);
  if (!v.routes_agree)
    throw std::logic_error("unit_submatrix_check: certified routes disagree");
  v.status = VerdictStatus::Certified;
  v.pass = true;
  v.abs_det_lower = std::sqrt(det_sq.abs_lower_d());
  return v;
}

namespace {

RankCertificate certify_rank(const RealBallMat& m, long structural_upper) {
  RankCertificate cert{};
  cert.structural_upper = structural_upper;
  cert.claimed_rank = -1;
  cert.lower_certified = false;
  auto minor = select_minor(m, structural_upper);
  if (!minor) return cert;
  auto det = det_ball(submatrix(m, *minor));
  if (!det || !det->excludes_zero()) return cert;
  cert.lower_certified = true;
  cert.claimed_rank = structural_upper;
  for (long r : minor->rows) cert.witness_rows.push_back(r + 1);
  for (long c : minor->cols) cert.witness_cols.push_back(c + 1);
  cert.witness_margin = det->abs_lower_d();
  return cert;
}

}  // namespace

RanksResult certified_ranks(const TorsionMatrixT& T) {
  const long n = T.n();
  RanksResult res{VerdictStatus::Undecided, {}, {}};
  // Re T = T(1+S)/2, Im T = T(1-S)/(2i): structural upper bounds are the
  // exact ranks of 1 +- S.
  res.re = certify_rank(T.real_part(), rank_one_plus_minus_S(n, +1));
  res.im = certify_rank(T.imag_part(), rank_one_plus_minus_S(n, -1));
  if (res.re.lower_certified && res.im.lower_certified)
    res.status = VerdictStatus::Certified;
  return res;
}

InductionStepVerdict induction_step_check(long n_prime, long p, long k,
                                          mpfr_prec_t prec) {
  InductionStepVerdict v{VerdictStatus::Undecided, false, false, 0.0};
  ShiftMatrixE E = shift_matrix(n_prime, p);
  EigenClaimVerdict ec = eigen_claim_E(E);
  // Spectrum of E lies in {0} union roots of unity, and p^{-k-1} < 1, so
  // 1 - p^{-k-1} E is invertible.
  v.shift_structurally_invertible = ec.all_trajectories_periodic && p >= 2 && k >= 1;
  TorsionMatrixT Tp(n_prime, k, prec);
  RealBall scale = pow_si(RealBall::from_si(p, prec), -(k + 1));
  ComplexBallMat M(n_prime, n_prime, prec);
  for (long a = 1; a <= n_prime; ++a)
    for (long b = 1; b <= n_prime; ++b) {
      // row a of (1 - p^{-k-1} E) times column b of T'
      ComplexBall acc = Tp.at(a, b);
      long pa = (a * p) % n_prime == 0 ? n_prime : (a * p) % n_prime;
      acc = sub(acc, mul(Tp.at(pa, b), scale));
      M.at(a - 1, b - 1) = acc;
    }
  auto det = det_ball(std::move(M));
  if (!det) return v;
  RealBall sq = det->abs_sq();
  if (!sq.excludes_zero()) return v;
  v.status = VerdictStatus::Certified;
  v.pass = v.shift_structurally_invertible;
  v.product_det_lower = std::sqrt(sq.abs_lower_d());
  return v;
}

KubertRowsVerdict kubert_row_check(const TorsionMatrixT& T) {
  const long n = T.n();
  const long k = T.k();
  KubertRowsVerdict v{VerdictStatus::Certified, true};
  for (long p = 2; p <= n; ++p) {
    if (!is_prime(p) || n % p != 0) continue;
    const long np = n / p;
    for (long a = 1; a <= n; ++a)
      for (long b = 1; b <= n; ++b) {
        ComplexBall lhs(T.prec());
        for (long j = 1; j <= p; ++j) lhs = add(lhs, T.at(a, b + j * np));
        ComplexBall rhs =
            a % p != 0
                ? mul(T.at(a * p, b), pow_si(RealBall::from_si(p, T.prec()), -k))
                : mul_si(T.at(a, b), p);
        if (!overlap(lhs, rhs)) v.pass = false;
      }
  }
  return v;
}

MidpointSvdSanity midpoint_svd_sanity(const TorsionMatrixT& T) {
  const long n = T.n();
  Eigen::MatrixXd re(n, n), im(n, n);
  for (long a = 1; a <= n; ++a)
    for (long b = 1; b <= n; ++b) {
      re(a - 1, b - 1) = T.at(a, b).real().mid_d();
      im(a - 1, b - 1) = T.at(a, b).imag().mid_d();
    }
  MidpointSvdSanity s{0, 0, 1e-8};
  auto count = [&](const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    long r = 0;
    for (long i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > s.threshold) ++r;
    return r;
  };
  s.re_rank = count(re);
  s.im_rank = count(im);
  return s;
}

}  // namespace lenscert
