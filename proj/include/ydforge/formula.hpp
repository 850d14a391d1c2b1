#pragma once

#include <string>
#include <vector>

namespace ydforge {

/// Two notations for the same generator formulas: the generic one on a
/// left algebra (x~, G, Gbar, tau, constants C) and the phase-space one
/// (y^, x^, z^, O, Obar, script S, constants -C). Because the structure
/// constants flip sign between the conventions, every trace term changes
/// sign on the way through the adapter.
enum class Notation { left_leibniz, phase_space };

enum class HSym { G, Gbar };      // phase space renders Gbar as O and G as Obar
enum class OpFamily { theta, phi };

/// One summand of a displayed structure-map formula.
struct FormulaTerm {
  enum class Kind {
    sum_gen_sharp_gen,   // sum_i H^i_j # u_i
    unit_sharp_gen,      // 1 # u_j
    trace_sharp_unit,    // (sum_i C^i_{ij}) # 1
    op_generator,        // bare opposite-algebra generator
    op_trace_unit,       // (sum_i C^i_{ij}) 1 in the opposite algebra
  };
  Kind kind;
  int sign = +1;
  HSym hsym = HSym::Gbar;        // sum_gen_sharp_gen only
  OpFamily op = OpFamily::theta; // op_generator only
};

/// Left-hand sides are structured so the adapter can rewrite them.
struct FormulaLhs {
  enum class Map { alpha_r, beta_r, eps_r, alpha_l, beta_l, eps_l, tau, tau_squared };
  enum class Arg { gen_u, unit_sharp_gen_u, op_theta, op_phi, alpha_l_of_op_phi, alpha_l_of_op_theta };
  Map map;
  Arg arg;
};

struct GeneratorFormula {
  Notation notation = Notation::left_leibniz;
  FormulaLhs lhs;
  std::vector<FormulaTerm> terms;

  std::string render() const;
};

/// The substitution between the two conventions, applicable in either
/// direction; round-trips to the identity.
GeneratorFormula convention_adapter(const GeneratorFormula& f);

/// The displayed structure-map formulas on generators, in the left-algebra
/// convention. tau_squared carries the same-signed trace term as tau.
std::vector<GeneratorFormula> algebroid_generator_formulas();

/// The corrected antipode-square identity in phase-space symbols, in the
/// convention where the antipode of a generator carries the minus trace
/// term (so the square does as well).
GeneratorFormula remark_square_formula();

}  // namespace ydforge
