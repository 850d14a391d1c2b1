#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ydforge/rational.hpp"

namespace ydforge {

/// Generator variable of the ambient free commutative ring on 2n^2
/// symbols: kind 0 is a matrix entry G^i_j, kind 1 the inverse entry
/// Gbar^i_j. Variable ids are kind-major, then row-major, which fixes
/// the total order used everywhere.
struct GenVar {
  int kind;   // 0 = G, 1 = Gbar
  int upper;  // i, 1-based
  int lower;  // j, 1-based

  int id(int n) const { return kind * n * n + (upper - 1) * n + (lower - 1); }
  static GenVar from_id(int id, int n) {
    const int kind = id / (n * n);
    const int rest = id % (n * n);
    return GenVar{kind, rest / n + 1, rest % n + 1};
  }
  std::string str() const;
};

inline int g_id(int i, int j, int n) { return GenVar{0, i, j}.id(n); }
inline int gbar_id(int i, int j, int n) { return GenVar{1, i, j}.id(n); }

/// Sparse commutative monomial: (variable id, exponent) pairs sorted by
/// id, no zero exponents stored.
class Monomial {
 public:
  using Factor = std::pair<int, int>;

  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial var(int id, int exp = 1);
  static Monomial from_factors(std::vector<Factor> factors);  // sorts and merges

  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent(int id) const;
  const std::vector<Factor>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divide_by(const Monomial& o) const;  // requires o.divides(*this)
  bool coprime(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return factors_ != o.factors_; }
  bool operator<(const Monomial& o) const { return factors_ < o.factors_; }  // container order only

  /// Degrevlex: higher total degree wins; on ties the rightmost differing
  /// variable decides, smaller exponent there wins.
  static int cmp(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
};

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse polynomial with exact rational coefficients; terms kept sorted
/// descending in the monomial order, no zero coefficients stored.
class Poly {
 public:
  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(Rational c);
  static Poly variable(int id, int exp = 1);
  static Poly term(Monomial m, Rational c);
  static Poly from_terms(std::vector<Term> terms);  // canonicalizes

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  Poly scaled(const Rational& c) const;
  Poly mono_multiplied(const Monomial& m, const Rational& c) const;
  Poly monic() const;  // leading coefficient 1; zero stays zero

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Serialized as a sorted term list, e.g. "G[1,2]^2*Gbar[2,2] - 1/3".
  std::string str(int n) const;

 private:
  std::vector<Term> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

std::string monomial_str(const Monomial& m, int n);

/// Parses the printed polynomial form: terms joined by + or -, factors
/// joined by *, symbols G[i,j] / Gbar[i,j] with optional ^e, and rational
/// coefficients. Throws std::invalid_argument with context on bad input.
Poly parse_poly(const std::string& text, int n);

}  // namespace ydforge
