#pragma once

#include <string>
#include <vector>

#include "ydforge/leibniz.hpp"

namespace ydforge {

/// Normal-ordered monomial of the enveloping algebra: a nondecreasing
/// sequence of basis indices of h_Lie, stored 0-based; empty = unit.
using PBWMonomial = std::vector<int>;

struct PBWTerm {
  PBWMonomial mono;
  Rational coef;
};

/// Graded-lex order on PBW monomials, used only for canonical storage.
int pbw_cmp(const PBWMonomial& a, const PBWMonomial& b);

/// Finite rational combination of PBW monomials, canonically sorted,
/// no zero coefficients.
class PBWElement {
 public:
  PBWElement() = default;
  static PBWElement zero() { return PBWElement(); }
  static PBWElement unit() { return term({}, Rational(1)); }
  static PBWElement generator(int a) { return term({a}, Rational(1)); }
  static PBWElement term(PBWMonomial m, Rational c);
  static PBWElement from_terms(std::vector<PBWTerm> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<PBWTerm>& terms() const { return terms_; }
  int degree() const;

  PBWElement operator+(const PBWElement& o) const;
  PBWElement operator-(const PBWElement& o) const;
  PBWElement operator-() const;
  PBWElement& operator+=(const PBWElement& o) { return *this = *this + o; }
  PBWElement& operator-=(const PBWElement& o) { return *this = *this - o; }
  PBWElement scaled(const Rational& c) const;

  bool operator==(const PBWElement& o) const;
  bool operator!=(const PBWElement& o) const { return !(*this == o); }

  /// Printed as sorted factors, e.g. "2*x1*x2^2 - 1/3".
  std::string str() const;

 private:
  std::vector<PBWTerm> terms_;
};

/// Degree-1 element from coordinates in the h_Lie basis.
PBWElement pbw_linear(const RatVec& coords);

/// Image of the h-basis vector x_i in U(h_Lie), through the quotient map.
PBWElement pbw_of_h_basis(const LieQuotient& lq, int i);

/// Product with exhaustive normal-ordering: out-of-order adjacent factors
/// x_l x_k (l > k) rewrite to x_k x_l + [x_l, x_k] until sorted.
/// Terminates by the (degree, inversion count) measure.
PBWElement pbw_mul(const LieQuotient& lq, const PBWElement& a, const PBWElement& b);
PBWElement pbw_mul_mono(const LieQuotient& lq, const PBWMonomial& a, const PBWMonomial& b);

/// Element of U (x) U, canonical on monomial pairs.
class TensorElement {
 public:
  struct Entry {
    PBWMonomial left, right;
    Rational coef;
  };

  TensorElement() = default;
  static TensorElement from_entries(std::vector<Entry> entries);

  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  bool operator==(const TensorElement& o) const;

  /// Componentwise product (the algebra structure of U (x) U).
  TensorElement mul(const LieQuotient& lq, const TensorElement& o) const;

 private:
  std::vector<Entry> entries_;
};

/// Primitive coproduct extended as an algebra map: on a PBW monomial the
/// sum over exponent splittings with binomial multiplicities.
TensorElement coproduct_u(const PBWElement& u);

/// Coefficient of the empty monomial.
Rational counit_u(const PBWElement& u);

/// Antihomomorphism extending x -> -x.
PBWElement antipode_u(const LieQuotient& lq, const PBWElement& u);

/// Checks that the presentation relators die in U(h_Lie): for every basis
/// pair of h, q[x_i,x_j] - q(x_i) q(x_j) + q(x_j) q(x_i) = 0, and the
/// kernel basis maps to zero in degree 1.
bool relator_wellformed(const LeibnizAlgebra& alg, const LieQuotient& lq);

/// All PBW monomials over m generators with degree in [0, degcap].
std::vector<PBWMonomial> pbw_monomials_up_to(int m, int degcap);

/// One summand of a written U-expression: generator letters in the order
/// they appear (not necessarily sorted) with a coefficient.
struct UWord {
  std::vector<int> letters;  // 0-based
  Rational coef;
};

/// Parses "c*x1^2*x3 - x2*x1" style expressions; indices 1-based, at most
/// m. Factor order is preserved so that products can be normal-ordered
/// by the caller.
std::vector<UWord> parse_u_words(const std::string& text, int m);

/// Evaluates parsed words into U(h_Lie) via normal ordering.
PBWElement pbw_from_words(const LieQuotient& lq, const std::vector<UWord>& words);

}  // namespace ydforge
