#pragma once

#include <optional>
#include <vector>

#include "glc/field.hpp"

namespace glc {

// Dense matrix over the runtime field, row-major.
struct Mat {
  Field F;
  std::size_t nrows = 0, ncols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(Field f, std::size_t r, std::size_t c) : F(f), nrows(r), ncols(c), a(r * c) {}

  Scalar& at(std::size_t i, std::size_t j) { return a[i * ncols + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a[i * ncols + j]; }

  static Mat identity(Field f, std::size_t n);
  Mat mul(const Mat& o) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
};

std::size_t mat_rank(Mat A);

// columns form a basis of ker(A)
Mat mat_nullspace(const Mat& A);

// one solution of A x = b, if any
std::optional<std::vector<Scalar>> mat_solve(const Mat& A, const std::vector<Scalar>& b);

Mat hstack(const Mat& A, const Mat& B);

// indices of columns of K that extend the column span of B to span(B) + span(K)
std::vector<std::size_t> complement_indices(const Mat& B, const Mat& K);

// Coordinates in ker(A)/im(B).  Representatives are columns of `reps`;
// coords() solves against [B | reps], so it expects cycles of A.
struct QuotientSpace {
  Field F;
  std::size_t ambient = 0;
  Mat reps;      // ambient x dim
  Mat solvemat;  // [image basis | reps]
  std::size_t dim() const { return reps.ncols; }
  std::vector<Scalar> coords(const std::vector<Scalar>& v) const;
};

// A may have 0 rows (then ker A = everything); B may have 0 columns
QuotientSpace quotient_space(const Mat& A, const Mat& B);

}  // namespace glc
