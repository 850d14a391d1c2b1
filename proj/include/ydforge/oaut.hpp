#pragma once

#include <vector>

#include "ydforge/groebner.hpp"
#include "ydforge/leibniz.hpp"
#include "ydforge/poly.hpp"

namespace ydforge {

/// Element of B_n (x) B_n as a canonical sum of monomial pairs.
class PolyTensor {
 public:
  struct Entry {
    Monomial left, right;
    Rational coef;
  };

  PolyTensor() = default;
  static PolyTensor from_entries(std::vector<Entry> entries);  // canonicalizes
  static PolyTensor of(const Poly& a, const Poly& b);

  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  PolyTensor operator+(const PolyTensor& o) const;
  PolyTensor operator-(const PolyTensor& o) const;
  PolyTensor operator*(const PolyTensor& o) const;  // componentwise product
  bool operator==(const PolyTensor& o) const;

  /// Collects the left legs against each distinct right monomial.
  std::vector<std::pair<Monomial, Poly>> by_right() const;
  std::vector<std::pair<Monomial, Poly>> by_left() const;

 private:
  std::vector<Entry> entries_;
};

/// Hopf structure maps of the free bialgebra B_n, descending to the
/// automorphism quotient. Coproduct is the matrix one on G and its
/// inverse-transposed companion on Gbar; counit evaluates at the
/// identity matrix; the antipode swaps G and Gbar.
PolyTensor coproduct_h(const Poly& p, int n);
Rational counit_h(const Poly& p, int n);
Poly antipode_h(const Poly& p, int n);

PolyTensor coproduct_h_mono(const Monomial& m, int n);

/// The Hopf algebra O(Aut(h)): the algebra plus the reduced Groebner
/// basis of its defining ideal. Elements are always represented in the
/// ambient free ring and compared through normal forms.
struct OAut {
  LeibnizAlgebra alg;
  GroebnerBasis gb;
  int n = 0;

  static OAut build(const LeibnizAlgebra& alg, const GroebnerOptions& opts = {});
};

/// Generator images of the basis-change isomorphism: G^i_j in the new
/// basis maps to sum_{l,m} T^i_l G^l_m Tinv^m_j, and Gbar to the same
/// sandwich of the inverse entries. Returned indexed by variable id.
std::vector<Poly> basis_change_generators(const BasisChange& bc, int n);

/// Substitutes images[id] for every variable occurrence.
Poly apply_substitution(const Poly& p, const std::vector<Poly>& images);

/// Certificate that t lies in I (x) B + B (x) I: reduce all left legs,
/// then require the right legs of the remainder to reduce to zero.
bool tensor_reduces_to_zero(const PolyTensor& t, const GroebnerBasis& gb);

}  // namespace ydforge
