#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ydforge/pairing.hpp"
#include "ydforge/util.hpp"

namespace ydforge {

/// Element of the smash product: finite rational combination of pairs
/// (monomial in the generator ring, PBW monomial). Stored canonically;
/// equality of smash values is always decided modulo the automorphism
/// ideal, leg-wise after collecting against the PBW basis.
class SmashElement {
 public:
  struct Entry {
    Monomial h;
    PBWMonomial u;
    Rational coef;
  };

  SmashElement() = default;
  static SmashElement from_entries(std::vector<Entry> entries);
  static SmashElement unit() { return of(Poly::constant(Rational(1)), PBWElement::unit()); }
  static SmashElement of(const Poly& h, const PBWElement& u);

  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  SmashElement operator+(const SmashElement& o) const;
  SmashElement operator-(const SmashElement& o) const;
  SmashElement scaled(const Rational& c) const;
  SmashElement& operator+=(const SmashElement& o) { return *this = *this + o; }
  SmashElement& operator-=(const SmashElement& o) { return *this = *this - o; }

  /// H-leg polynomial per distinct PBW monomial.
  std::vector<std::pair<PBWMonomial, Poly>> by_pbw() const;

  std::string str(int n) const;

 private:
  std::vector<Entry> entries_;
};

struct AutSample {
  RatMat m, minv;
};

enum class VerifyMode { groebner, eval };

VerifyMode parse_mode(const std::string& text);

/// Owns every structure needed to compute in O(Aut(h)) # U(h_Lie):
/// the algebra, its Lie quotient, the Groebner basis of the automorphism
/// ideal, the pairing, and the coaction table. Construction refuses
/// algebras that fail the Leibniz identity.
class SmashContext {
 public:
  explicit SmashContext(const LeibnizAlgebra& alg, const GroebnerOptions& opts = {});
  SmashContext(const LeibnizAlgebra& alg, const LieQuotient& lq, const GroebnerOptions& opts = {});
  ~SmashContext();
  SmashContext(const SmashContext&) = delete;
  SmashContext& operator=(const SmashContext&) = delete;

  const LeibnizAlgebra& alg() const { return alg_; }
  const LieQuotient& lq() const { return lq_; }
  const OAut& oaut() const { return oaut_; }
  const PairingContext& pairing() const { return pairing_; }
  int n() const { return alg_.n; }
  int m() const { return lq_.m; }

  /// lambda on the h_Lie generator a: sum_i Gbar^i_a' # x_i translated
  /// through the section (G instead of Gbar for a right algebra).
  const SmashElement& coaction_generator(int a) const;

  /// Antimultiplicative extension: on a monomial the reversed product of
  /// generator coactions; unital and linear.
  SmashElement coaction(const PBWElement& u) const;
  SmashElement coaction_mono(const PBWMonomial& u) const;

  SmashElement smash_mul(const SmashElement& a, const SmashElement& b) const;

  /// a acted by h # b, i.e. (a <| h) b.
  PBWElement extended_act(const PBWElement& a, const SmashElement& s) const;

  /// Zero test modulo the automorphism ideal (leg-wise normal forms).
  bool is_zero_mod(const SmashElement& s) const;

  /// Zero test by exact evaluation of every H leg at sampled automorphisms.
  bool is_zero_eval(const SmashElement& s, const std::vector<AutSample>& samples) const;

 private:
  void init();

  LeibnizAlgebra alg_;
  LieQuotient lq_;
  OAut oaut_;
  PairingContext pairing_;
  std::vector<SmashElement> coaction_table_;

  struct Memo;
  std::unique_ptr<Memo> memo_;
};

/// Left multiplication by a plain H monomial collapses the coproduct:
/// (k # 1)(h # w) = k h # w.
SmashElement h_mul_smash(const Monomial& k, const SmashElement& s);

/// The Yetter-Drinfeld verification suite: for PBW monomials u, v up to
/// degcap and f over generators and degree-2 generator monomials,
///   (1) images of the coaction commute with 1 # U,
///   (2) coaction coassociativity and counitality,
///   (3) the Yetter-Drinfeld compatibility in smash form,
///   (4) braided commutativity through the extended action,
///   (5) antimultiplicativity of the coaction.
/// Equality is modulo the automorphism ideal in groebner mode, or exact
/// vanishing at the sampled automorphisms in eval mode.
Report verify_yd_suite(const SmashContext& ctx, int degcap, VerifyMode mode,
                       const std::vector<AutSample>& samples = {}, int threads = 0);

/// Central finite difference of the matrix-entry function along the
/// one-parameter flow of ad x_k, compared against the structure constant.
/// Exact finite sum when ad x_k is nilpotent, scaling-and-squaring
/// otherwise. Indices 1-based; requires a Lie algebra.
double numeric_differential_check(const LeibnizAlgebra& alg, int k, int i, int j, double step);

}  // namespace ydforge
