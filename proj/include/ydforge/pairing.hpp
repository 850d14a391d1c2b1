#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ydforge/oaut.hpp"
#include "ydforge/pbw.hpp"
#include "ydforge/report.hpp"

namespace ydforge {

/// The pairing between U(h_Lie) and the generator ring, with its induced
/// right action. Degree-1 base values: a left algebra pairs the class of
/// x_k with G^i_j as C^i_{kj}, a right algebra as -C^i_{jk}; Gbar entries
/// carry the opposite sign. Higher degrees follow by splitting the U leg
/// through the coproduct and the H leg through the differentiation rule.
/// Results are memoized per monomial pair; the memo is guarded so shared
/// contexts can be queried concurrently.
class PairingContext {
 public:
  PairingContext(const LeibnizAlgebra& alg, const LieQuotient& lq, const OAut* oaut);
  ~PairingContext();
  PairingContext(const PairingContext&) = delete;
  PairingContext& operator=(const PairingContext&) = delete;

  const LeibnizAlgebra& alg() const { return *alg_; }
  const LieQuotient& lq() const { return *lq_; }
  const OAut& oaut() const;
  int n() const { return alg_->n; }
  int m() const { return lq_->m; }

  /// <u, f>, bilinear in both arguments.
  Rational pair_value(const PBWElement& u, const Poly& f) const;
  Rational pair_mono(const PBWMonomial& u, const Monomial& f) const;

  /// Pairing at the tensor-algebra level: an arbitrary word of h-basis
  /// letters against f, used for relator obligations.
  Rational pair_word(const std::vector<int>& hword, const Monomial& f) const;

  /// u acted by f: sum <u_(1), f> u_(2).
  PBWElement act(const PBWElement& u, const Poly& f) const;
  PBWElement act_mono(const PBWMonomial& u, const Monomial& f) const;

  /// Degree-1 base value <x, v> for x given by an h_Lie generator.
  Rational base_value(int gen, const GenVar& v) const;

 private:
  Rational pair_deg1(int gen, const Monomial& f) const;
  Rational pair_word_deg1(int letter, const Monomial& f) const;

  const LeibnizAlgebra* alg_;
  const LieQuotient* lq_;
  const OAut* oaut_;
  std::vector<RatMat> base_;    // per h_Lie generator: matrix of <e_a, G^i_j>
  std::vector<RatMat> base_h_;  // per h basis letter: matrix of <x_k, G^i_j>

  struct Memo;
  std::unique_ptr<Memo> memo_;
};

/// Counit of a monomial/polynomial in the generator ring (evaluation at
/// the identity), shared by the recursion.
Rational eps_mono(const Monomial& m, int n);

/// Proof obligations for the pairing to descend to the quotients:
/// (a) kernel vectors of h -> h_Lie pair to zero with every generator;
/// (b) tensor-algebra relators pair to zero with all generators and all
///     generator monomials up to the degree cap;
/// (c) every PBW monomial up to the cap pairs to zero with every
///     automorphism-ideal generator.
Report pairing_welldefined(const PairingContext& ctx, int degcap);

/// Bialgebra-pairing laws plus antipode compatibility, exhaustively on
/// PBW monomials up to degcap against generator monomials of degree <= 2.
Report hopf_pairing_axioms(const PairingContext& ctx, int degcap);

}  // namespace ydforge
