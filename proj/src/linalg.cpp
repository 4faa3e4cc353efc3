#include "glc/linalg.hpp"

namespace glc {

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Mat Mat::mul(const Mat& o) const {
  if (ncols != o.nrows) throw Error("matrix product shape mismatch");
  Mat out(F, nrows, o.ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t k = 0; k < ncols; ++k) {
      const Scalar& x = at(i, k);
      if (F.is_zero(x)) continue;
      for (std::size_t j = 0; j < o.ncols; ++j)
        out.at(i, j) = F.add(out.at(i, j), F.mul(x, o.at(k, j)));
    }
  return out;
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& v) const {
  if (v.size() != ncols) throw Error("matrix apply shape mismatch");
  std::vector<Scalar> out(nrows, F.zero());
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j)
      if (!F.is_zero(at(i, j))) out[i] = F.add(out[i], F.mul(at(i, j), v[j]));
  return out;
}

namespace {

// row echelon in place; returns pivot columns
std::vector<std::size_t> echelon(Mat& A) {
  const Field& F = A.F;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < A.ncols && row < A.nrows; ++col) {
    std::size_t p = row;
    while (p < A.nrows && F.is_zero(A.at(p, col))) ++p;
    if (p == A.nrows) continue;
    if (p != row)
      for (std::size_t j = 0; j < A.ncols; ++j) std::swap(A.at(p, j), A.at(row, j));
    Scalar inv = F.inv(A.at(row, col));
    for (std::size_t j = col; j < A.ncols; ++j) A.at(row, j) = F.mul(A.at(row, j), inv);
    for (std::size_t i = 0; i < A.nrows; ++i) {
      if (i == row || F.is_zero(A.at(i, col))) continue;
      Scalar c = A.at(i, col);
      for (std::size_t j = col; j < A.ncols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(c, A.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t mat_rank(Mat A) { return echelon(A).size(); }

Mat mat_nullspace(const Mat& A) {
  Mat R = A;
  std::vector<std::size_t> pivots = echelon(R);
  const Field& F = A.F;
  std::vector<bool> is_pivot(A.ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < A.ncols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat N(F, A.ncols, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    N.at(fc, k) = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      N.at(pivots[r], k) = F.neg(R.at(r, fc));
  }
  return N;
}

std::optional<std::vector<Scalar>> mat_solve(const Mat& A, const std::vector<Scalar>& b) {
  if (b.size() != A.nrows) throw Error("solve shape mismatch");
  const Field& F = A.F;
  Mat Ab(F, A.nrows, A.ncols + 1);
  for (std::size_t i = 0; i < A.nrows; ++i) {
    for (std::size_t j = 0; j < A.ncols; ++j) Ab.at(i, j) = A.at(i, j);
    Ab.at(i, A.ncols) = b[i];
  }
  std::vector<std::size_t> pivots = echelon(Ab);
  if (!pivots.empty() && pivots.back() == A.ncols) return std::nullopt;  // inconsistent
  std::vector<Scalar> x(A.ncols, F.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = Ab.at(r, A.ncols);
  return x;
}

Mat hstack(const Mat& A, const Mat& B) {
  if (A.nrows != B.nrows) throw Error("hstack shape mismatch");
  Mat out(A.F, A.nrows, A.ncols + B.ncols);
  for (std::size_t i = 0; i < A.nrows; ++i) {
    for (std::size_t j = 0; j < A.ncols; ++j) out.at(i, j) = A.at(i, j);
    for (std::size_t j = 0; j < B.ncols; ++j) out.at(i, A.ncols + j) = B.at(i, j);
  }
  return out;
}

std::vector<std::size_t> complement_indices(const Mat& B, const Mat& K) {
  Mat W = hstack(B, K);
  Mat R = W;
  std::vector<std::size_t> pivots = echelon(R);
  std::vector<std::size_t> out;
  for (std::size_t c : pivots)
    if (c >= B.ncols) out.push_back(c - B.ncols);
  return out;
}

QuotientSpace quotient_space(const Mat& A, const Mat& B) {
  const Field& F = A.F;
  Mat K = A.nrows == 0 ? Mat::identity(F, A.ncols) : mat_nullspace(A);
  std::vector<std::size_t> idx = complement_indices(B, K);
  QuotientSpace Q;
  Q.F = F;
  Q.ambient = A.ncols;
  Q.reps = Mat(F, A.ncols, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t i = 0; i < A.ncols; ++i) Q.reps.at(i, k) = K.at(i, idx[k]);
  Q.solvemat = hstack(B, Q.reps);
  return Q;
}

std::vector<Scalar> QuotientSpace::coords(const std::vector<Scalar>& v) const {
  auto sol = mat_solve(solvemat, v);
  if (!sol) throw Error("quotient coords: vector is not a cycle");
  std::vector<Scalar> out(reps.ncols, F.zero());
  std::size_t off = solvemat.ncols - reps.ncols;
  for (std::size_t k = 0; k < reps.ncols; ++k) out[k] = (*sol)[off + k];
  return out;
}

}  // namespace glc
