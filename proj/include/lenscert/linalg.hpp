// Dense ball matrices and certified determinants via pivoted elimination.
#pragma once

#include "lenscert/ball.hpp"

#include <optional>
#include <vector>

namespace lenscert {

template <typename Scalar>
struct BallMat {
  long rows = 0;
  long cols = 0;
  std::vector<Scalar> data;

  BallMat() = default;
  BallMat(long r, long c, mpfr_prec_t prec)
      : rows(r), cols(c), data(static_cast<size_t>(r * c), Scalar(prec)) {}
  Scalar& at(long i, long j) { return data[static_cast<size_t>(i * cols + j)]; }
  const Scalar& at(long i, long j) const { return data[static_cast<size_t>(i * cols + j)]; }
};

using RealBallMat = BallMat<RealBall>;
using ComplexBallMat = BallMat<ComplexBall>;

// Determinant enclosure by Gaussian elimination with partial pivoting on the
// largest midpoint magnitude. nullopt when a pivot ball straddles zero, i.e.
// the enclosure is too wide to eliminate with.
std::optional<RealBall> det_ball(RealBallMat m);
std::optional<ComplexBall> det_ball(ComplexBallMat m);

// Greedy full-pivot selection of an r x r candidate minor of a ball matrix,
// pivoting on the largest midpoint magnitude. Returns (row, col) index sets
// of size r, or nullopt when elimination degenerates before reaching r.
struct MinorIndices {
  std::vector<long> rows;
  std::vector<long> cols;
};
std::optional<MinorIndices> select_minor(const RealBallMat& m, long r);
std::optional<MinorIndices> select_minor(const ComplexBallMat& m, long r);

RealBallMat submatrix(const RealBallMat& m, const MinorIndices& idx);
ComplexBallMat submatrix(const ComplexBallMat& m, const MinorIndices& idx);

}  // namespace lenscert
