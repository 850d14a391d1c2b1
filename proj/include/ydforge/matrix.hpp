#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "ydforge/rational.hpp"

namespace Eigen {
template <>
struct NumTraits<ydforge::Rational> : GenericNumTraits<ydforge::Rational> {
  typedef ydforge::Rational Real;
  typedef ydforge::Rational NonInteger;
  typedef ydforge::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30
  };
  static inline Real epsilon() { return ydforge::Rational(0); }
  static inline Real dummy_precision() { return ydforge::Rational(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace ydforge {

using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline RatMat rat_identity(Eigen::Index n) {
  RatMat m = RatMat::Constant(n, n, Rational(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

inline bool is_zero(const RatMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Row echelon form data from exact Gauss-Jordan elimination with
/// smallest-index pivoting (the first nonzero column, the first nonzero
/// row below the current one).
struct Rref {
  RatMat mat;               // reduced row echelon form
  std::vector<int> pivots;  // pivot column per nonzero row
  int rank = 0;
};

Rref rref(RatMat a);

/// Exact inverse; empty when singular.
std::optional<RatMat> try_inverse(const RatMat& a);

/// Columns form a basis of the null space {v : a v = 0}.
RatMat kernel_basis(const RatMat& a);

/// Span tracker over Q^n built on incremental row reduction.
class RowSpan {
 public:
  explicit RowSpan(int dim) : dim_(dim) {}

  /// Returns true when v was independent of the current span.
  bool insert(RatVec v);

  /// Reduces v modulo the span; the result has zeros in all pivot columns.
  RatVec reduce(RatVec v) const;

  bool contains(const RatVec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<RatVec>& rows() const { return rows_; }

 private:
  int dim_;
  std::vector<RatVec> rows_;  // reduced, monic at pivot, sorted by pivot
  std::vector<int> pivots_;
};

}  // namespace ydforge
