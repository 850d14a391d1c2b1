#include "ydforge/matrix.hpp"

#include <algorithm>

namespace ydforge {

Rref rref(RatMat a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Rref out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < rows; ++r)
      if (!a(r, col).is_zero()) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const Rational inv = a(row, col).inverse();
    for (Eigen::Index c = 0; c < cols; ++c) a(row, c) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (Eigen::Index c = 0; c < cols; ++c) a(r, c) -= f * a(row, c);
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  out.rank = static_cast<int>(row);
  out.mat = std::move(a);
  return out;
}

std::optional<RatMat> try_inverse(const RatMat& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) return std::nullopt;
  RatMat aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = rat_identity(n);
  Rref r = rref(std::move(aug));
  if (r.rank < n || r.pivots[static_cast<size_t>(n) - 1] >= n) return std::nullopt;
  return RatMat(r.mat.rightCols(n));
}

RatMat kernel_basis(const RatMat& a) {
  const Eigen::Index cols = a.cols();
  Rref r = rref(a);
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
  const Eigen::Index nullity = cols - r.rank;
  RatMat basis = RatMat::Constant(cols, nullity, Rational(0));
  Eigen::Index kcol = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    basis(free_col, kcol) = Rational(1);
    for (int prow = 0; prow < r.rank; ++prow)
      basis(r.pivots[static_cast<size_t>(prow)], kcol) = -r.mat(prow, free_col);
    ++kcol;
  }
  return basis;
}

bool RowSpan::insert(RatVec v) {
  v = reduce(std::move(v));
  int piv = -1;
  for (int i = 0; i < dim_; ++i)
    if (!v(i).is_zero()) { piv = i; break; }
  if (piv < 0) return false;
  const Rational inv = v(piv).inverse();
  for (int i = 0; i < dim_; ++i) v(i) *= inv;
  // keep the earlier rows reduced against the new pivot
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = rows_[r](piv);
    if (!f.is_zero())
      for (int i = 0; i < dim_; ++i) rows_[r](i) -= f * v(i);
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

RatVec RowSpan::reduce(RatVec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v(pivots_[r]);
    if (f.is_zero()) continue;
    for (int i = 0; i < dim_; ++i) v(i) -= f * rows_[r](i);
  }
  return v;
}

bool RowSpan::contains(const RatVec& v) const {
  RatVec r = reduce(v);
  for (int i = 0; i < dim_; ++i)
    if (!r(i).is_zero()) return false;
  return true;
}

}  // namespace ydforge
