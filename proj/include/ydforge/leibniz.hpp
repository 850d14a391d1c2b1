#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ydforge/matrix.hpp"

namespace ydforge {

enum class Chirality { left, right };

std::string to_string(Chirality c);

/// Finite-dimensional Leibniz algebra given by exact structure constants
/// C^k_{ij}: the coefficient of x_k in [x_i, x_j].
struct LeibnizAlgebra {
  int n = 0;
  Chirality chirality = Chirality::left;
  std::vector<RatMat> c;  // c[k](i, j) = C^k_{ij}, all indices 0-based

  static LeibnizAlgebra zero(int n, Chirality ch = Chirality::left);

  const Rational& c_at(int k, int i, int j) const { return c[static_cast<size_t>(k)](i, j); }
  Rational& c_at(int k, int i, int j) { return c[static_cast<size_t>(k)](i, j); }

  /// [v, w] expanded through the structure constants.
  RatVec bracket(const RatVec& v, const RatVec& w) const;

  /// Trace of z -> [z, x_j]; the quantity consumed by the algebroid maps.
  Rational right_ad_trace(int j) const;
};

/// Index data of a failed Leibniz identity instance: the bracketed triple
/// (p, i, j) and the component k where the sides differ.
struct LeibnizViolation {
  int p, i, j, k;
  std::string describe() const;
};

/// Empty when the chirality-appropriate Leibniz identity holds for every
/// index triple.
std::optional<LeibnizViolation> find_leibniz_violation(const LeibnizAlgebra& alg);

bool check_leibniz(const LeibnizAlgebra& alg);

/// True iff the bracket is alternating: C^k_{ii} = 0 and C^k_{ij} = -C^k_{ji}.
/// Rejects non-Leibniz input.
bool is_lie(const LeibnizAlgebra& alg);

/// Maximal Lie quotient h -> h_Lie together with a chosen linear section.
struct LieQuotient {
  int m = 0;                        // dim h_Lie
  RatMat q;                         // m x n quotient map
  RatMat lift;                      // n x m section, q * lift = I_m
  std::vector<RatVec> kernel_basis; // spans ker q
  std::vector<RatMat> c_lie;        // structure constants of h_Lie, same layout as LeibnizAlgebra::c

  /// h_Lie packaged as an algebra (always two-sided alternating).
  LeibnizAlgebra lie_algebra(Chirality ch) const;
};

/// Computes the quotient by the smallest subspace that contains every
/// square [x, x] and is closed under bracketing with basis elements on
/// both sides. The kernel is seeded with the polarized squares
/// [x_i, x_i] and [x_i, x_j] + [x_j, x_i] and closed by iteration.
LieQuotient lie_quotient(const LeibnizAlgebra& alg);

/// Matrix of ad x_k. Left chirality: entry (i,j) = C^i_{kj} (z -> [x_k, z]);
/// right chirality: entry (i,j) = C^i_{jk} (z -> [z, x_k]). 0-based k.
RatMat ad_matrix(const LeibnizAlgebra& alg, int k);

struct BasisChange {
  RatMat t;     // x'_j = sum_i T^i_j x_i
  RatMat tinv;

  static BasisChange from(RatMat t);  // throws on singular input
};

/// Structure constants of the same algebra in the basis x'_j = sum_i T^i_j x_i.
LeibnizAlgebra transform_basis(const LeibnizAlgebra& alg, const BasisChange& bc);

}  // namespace ydforge
