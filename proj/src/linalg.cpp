#include "lenscert/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace lenscert {

namespace {

double mag(const RealBall& x) { return std::fabs(x.mid_d()); }
double mag(const ComplexBall& z) {
  return std::fabs(z.real().mid_d()) + std::fabs(z.imag().mid_d());
}

bool splits_zero(const RealBall& x) { return !x.excludes_zero(); }
bool splits_zero(const ComplexBall& z) { return !z.excludes_zero(); }

template <typename Scalar>
std::optional<Scalar> det_impl(BallMat<Scalar> m) {
  if (m.rows != m.cols) return std::nullopt;
  const long n = m.rows;
  if (n == 0) {
    Scalar one(kRadiusPrec);
    // empty product
    return std::nullopt;  // handled by callers; see det_ball specializations
  }
  int sign = 1;
  Scalar det = m.at(0, 0);  // placeholder, reset below
  bool first = true;
  for (long c = 0; c < n; ++c) {
    long piv = -1;
    double best = -1;
    for (long r = c; r < n; ++r) {
      double v = mag(m.at(r, c));
      if (v > best) { best = v; piv = r; }
    }
    if (piv != c) {
      for (long j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(piv, j));
      sign = -sign;
    }
    if (splits_zero(m.at(c, c))) return std::nullopt;
    for (long r = c + 1; r < n; ++r) {
      Scalar f = div(m.at(r, c), m.at(c, c));
      for (long j = c; j < n; ++j)
        m.at(r, j) = sub(m.at(r, j), mul(f, m.at(c, j)));
    }
    if (first) { det = m.at(c, c); first = false; }
    else det = mul(det, m.at(c, c));
  }
  if (sign < 0) det = neg(det);
  return det;
}

template <typename Scalar>
std::optional<MinorIndices> select_minor_impl(const BallMat<Scalar>& src, long r) {
  if (r < 0 || r > src.rows || r > src.cols) return std::nullopt;
  MinorIndices out;
  if (r == 0) return out;
  BallMat<Scalar> m = src;
  std::vector<long> row_ids(static_cast<size_t>(m.rows)), col_ids(static_cast<size_t>(m.cols));
  for (long i = 0; i < m.rows; ++i) row_ids[static_cast<size_t>(i)] = i;
  for (long j = 0; j < m.cols; ++j) col_ids[static_cast<size_t>(j)] = j;
  for (long step = 0; step < r; ++step) {
    long pr = -1, pc = -1;
    double best = -1;
    for (long i = step; i < m.rows; ++i)
      for (long j = step; j < m.cols; ++j) {
        double v = mag(m.at(i, j));
        if (v > best) { best = v; pr = i; pc = j; }
      }
    if (pr < 0) return std::nullopt;
    if (pr != step) {
      for (long j = 0; j < m.cols; ++j) std::swap(m.at(step, j), m.at(pr, j));
      std::swap(row_ids[static_cast<size_t>(step)], row_ids[static_cast<size_t>(pr)]);
    }
    if (pc != step) {
      for (long i = 0; i < m.rows; ++i) std::swap(m.at(i, step), m.at(i, pc));
      std::swap(col_ids[static_cast<size_t>(step)], col_ids[static_cast<size_t>(pc)]);
    }
    if (splits_zero(m.at(step, step))) return std::nullopt;
    for (long i = step + 1; i < m.rows; ++i) {
      Scalar f = div(m.at(i, step), m.at(step, step));
      for (long j = step; j < m.cols; ++j)
        m.at(i, j) = sub(m.at(i, j), mul(f, m.at(step, j)));
    }
  }
  out.rows.assign(row_ids.begin(), row_ids.begin() + r);
  out.cols.assign(col_ids.begin(), col_ids.begin() + r);
  std::sort(out.rows.begin(), out.rows.end());
  std::sort(out.cols.begin(), out.cols.end());
  return out;
}

template <typename Scalar>
BallMat<Scalar> submatrix_impl(const BallMat<Scalar>& m, const MinorIndices& idx) {
  BallMat<Scalar> out(static_cast<long>(idx.rows.size()),
                      static_cast<long>(idx.cols.size()), kRadiusPrec);
  for (size_t i = 0; i < idx.rows.size(); ++i)
    for (size_t j = 0; j < idx.cols.size(); ++j)
      out.at(static_cast<long>(i), static_cast<long>(j)) =
          m.at(idx.rows[i], idx.cols[j]);
  return out;
}

}  // namespace

std::optional<RealBall> det_ball(RealBallMat m) {
  if (m.rows == 0) return RealBall::from_si(1, kRadiusPrec);
  return det_impl(std::move(m));
}

std::optional<ComplexBall> det_ball(ComplexBallMat m) {
  if (m.rows == 0)
    return ComplexBall(RealBall::from_si(1, kRadiusPrec), RealBall(kRadiusPrec));
  return det_impl(std::move(m));
}

std::optional<MinorIndices> select_minor(const RealBallMat& m, long r) {
  return select_minor_impl(m, r);
}
std::optional<MinorIndices> select_minor(const ComplexBallMat& m, long r) {
  return select_minor_impl(m, r);
}

RealBallMat submatrix(const RealBallMat& m, const MinorIndices& idx) {
  return submatrix_impl(m, idx);
}
ComplexBallMat submatrix(const ComplexBallMat& m, const MinorIndices& idx) {
  return submatrix_impl(m, idx);
}

}  // namespace lenscert
