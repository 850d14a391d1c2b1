#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ydforge/leibniz.hpp"
#include "ydforge/poly.hpp"

namespace ydforge {

/// Raised when Buchberger would pass the configured intermediate-degree
/// bound; a reported failure, never a silent wrong answer.
struct DegreeCapExceeded : std::runtime_error {
  int cap;
  explicit DegreeCapExceeded(int cap_)
      : std::runtime_error("groebner: degree cap " + std::to_string(cap_) + " exceeded"),
        cap(cap_) {}
};

struct GroebnerOptions {
  int degree_cap = 12;
};

/// Reduced Groebner basis under degrevlex: generators monic,
/// inter-reduced, sorted ascending by leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  explicit GroebnerBasis(std::vector<Poly> gens) : gens_(std::move(gens)) {}

  const std::vector<Poly>& generators() const { return gens_; }
  size_t size() const { return gens_.size(); }
  const std::string& order() const { return order_; }

 private:
  std::vector<Poly> gens_;
  std::string order_ = "degrevlex";
};

GroebnerBasis buchberger(std::vector<Poly> gens, const GroebnerOptions& opts = {});

/// Remainder of full multivariate division by the basis; canonical for a
/// reduced basis, and zero exactly on ideal members.
Poly normal_form(const Poly& p, const GroebnerBasis& gb);

inline bool in_ideal(const Poly& p, const GroebnerBasis& gb) {
  return normal_form(p, gb).is_zero();
}

/// Defining relations of the automorphism subgroup inside the free ring:
/// sum_{l,m} C^k_{lm} G^l_i G^m_j - sum_r G^k_r C^r_{ij} for all i,j,k,
/// together with both families of inverse relations. Zero polynomials are
/// omitted.
std::vector<Poly> aut_ideal_generators(const LeibnizAlgebra& alg);

/// Substitutes G^i_j -> M(i,j), Gbar^i_j -> Minv(i,j). Requires M*Minv = I.
Rational evaluate(const Poly& p, const RatMat& m, const RatMat& minv, int n);

/// True iff m is invertible and intertwines the bracket:
/// sum_r C^r_{ij} M^k_r = sum_{l,m} M^l_i M^m_j C^k_{lm} for all i,j,k.
bool is_automorphism(const LeibnizAlgebra& alg, const RatMat& m);

}  // namespace ydforge
