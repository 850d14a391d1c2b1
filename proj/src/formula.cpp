#include "ydforge/formula.hpp"

#include <sstream>

namespace ydforge {

namespace {

// glyph table; combining accents are used where no precomposed form exists
constexpr const char* kSigmaI = "Σ_i ";           // Σ_i
constexpr const char* kSharp = " ♯ ";             // ♯
constexpr const char* kMinus = " − ";             // −
constexpr const char* kXTilde = "x̃";             // x~
constexpr const char* kYHat = "ŷ";                // ŷ
constexpr const char* kXHat = "x̂";               // x^
constexpr const char* kZHat = "ẑ";                // ẑ
constexpr const char* kGbar = "Ḡ";                // Ḡ
constexpr const char* kObar = "Ō";                // Ō
constexpr const char* kTau = "τ";                 // τ
constexpr const char* kScriptS = "\U0001d4ae";         // 𝒮
constexpr const char* kAlpha = "α";
constexpr const char* kBeta = "β";
constexpr const char* kEps = "ε";
constexpr const char* kSquared = "²";

std::string hsym_str(HSym h, Notation nt) {
  if (nt == Notation::left_leibniz) return h == HSym::G ? "G" : kGbar;
  return h == HSym::G ? kObar : "O";
}

std::string ugen(Notation nt, const std::string& index) {
  return (nt == Notation::left_leibniz ? std::string(kXTilde) : std::string(kYHat)) + "_" + index;
}

std::string opgen(Notation nt, OpFamily fam, const std::string& index) {
  if (nt == Notation::phase_space)
    return (fam == OpFamily::theta ? std::string(kXHat) : std::string(kZHat)) + "_" + index;
  return std::string(kXTilde) + "^op_{" + index + (fam == OpFamily::theta ? "θ" : "φ") + "}";
}

std::string trace_str() { return std::string("(") + kSigmaI + "C^i_{ij})"; }

std::string map_str(FormulaLhs::Map m, Notation nt) {
  switch (m) {
    case FormulaLhs::Map::alpha_r: return std::string(kAlpha) + "_R";
    case FormulaLhs::Map::beta_r: return std::string(kBeta) + "_R";
    case FormulaLhs::Map::eps_r: return std::string(kEps) + "_R";
    case FormulaLhs::Map::alpha_l: return std::string(kAlpha) + "_L";
    case FormulaLhs::Map::beta_l: return std::string(kBeta) + "_L";
    case FormulaLhs::Map::eps_l: return std::string(kEps) + "_L";
    case FormulaLhs::Map::tau: return nt == Notation::left_leibniz ? kTau : kScriptS;
    case FormulaLhs::Map::tau_squared:
      return (nt == Notation::left_leibniz ? std::string(kTau) : std::string(kScriptS)) + kSquared;
  }
  return "?";
}

std::string arg_str(FormulaLhs::Arg a, Notation nt) {
  switch (a) {
    case FormulaLhs::Arg::gen_u: return ugen(nt, "j");
    case FormulaLhs::Arg::unit_sharp_gen_u: return "1" + std::string(kSharp) + ugen(nt, "j");
    case FormulaLhs::Arg::op_theta: return opgen(nt, OpFamily::theta, "j");
    case FormulaLhs::Arg::op_phi: return opgen(nt, OpFamily::phi, "j");
    case FormulaLhs::Arg::alpha_l_of_op_phi:
      return std::string(kAlpha) + "_L(" + opgen(nt, OpFamily::phi, "j") + ")";
    case FormulaLhs::Arg::alpha_l_of_op_theta:
      return std::string(kAlpha) + "_L(" + opgen(nt, OpFamily::theta, "j") + ")";
  }
  return "?";
}

std::string term_str(const FormulaTerm& t, Notation nt) {
  switch (t.kind) {
    case FormulaTerm::Kind::sum_gen_sharp_gen:
      return std::string(kSigmaI) + hsym_str(t.hsym, nt) + "^i_j" + kSharp + ugen(nt, "i");
    case FormulaTerm::Kind::unit_sharp_gen: return "1" + std::string(kSharp) + ugen(nt, "j");
    case FormulaTerm::Kind::trace_sharp_unit: return trace_str() + kSharp + "1";
    case FormulaTerm::Kind::op_generator: return opgen(nt, t.op, "j");
    case FormulaTerm::Kind::op_trace_unit: return trace_str() + " 1";
  }
  return "?";
}

}  // namespace

std::string GeneratorFormula::render() const {
  std::ostringstream os;
  os << map_str(lhs.map, notation) << "(" << arg_str(lhs.arg, notation) << ") = ";
  bool first = true;
  for (const FormulaTerm& t : terms) {
    if (first) {
      if (t.sign < 0) os << "−";
      first = false;
    } else {
      os << (t.sign < 0 ? kMinus : " + ");
    }
    os << term_str(t, notation);
  }
  return os.str();
}

GeneratorFormula convention_adapter(const GeneratorFormula& f) {
  GeneratorFormula out = f;
  out.notation =
      f.notation == Notation::left_leibniz ? Notation::phase_space : Notation::left_leibniz;
  for (FormulaTerm& t : out.terms)
    if (t.kind == FormulaTerm::Kind::trace_sharp_unit ||
        t.kind == FormulaTerm::Kind::op_trace_unit)
      t.sign = -t.sign;
  return out;
}

std::vector<GeneratorFormula> algebroid_generator_formulas() {
  using K = FormulaTerm::Kind;
  using M = FormulaLhs::Map;
  using A = FormulaLhs::Arg;
  auto sum_gbar = [] { return FormulaTerm{K::sum_gen_sharp_gen, +1, HSym::Gbar, OpFamily::theta}; };
  auto unit_gen = [](int sign = +1) {
    return FormulaTerm{K::unit_sharp_gen, sign, HSym::Gbar, OpFamily::theta};
  };
  auto trace = [](int sign) {
    return FormulaTerm{K::trace_sharp_unit, sign, HSym::Gbar, OpFamily::theta};
  };
  auto opg = [](OpFamily fam) { return FormulaTerm{K::op_generator, +1, HSym::Gbar, fam}; };
  auto optrace = [](int sign) {
    return FormulaTerm{K::op_trace_unit, sign, HSym::Gbar, OpFamily::theta};
  };

  std::vector<GeneratorFormula> out;
  out.push_back({Notation::left_leibniz, {M::alpha_r, A::gen_u}, {unit_gen()}});
  out.push_back({Notation::left_leibniz, {M::beta_r, A::gen_u}, {sum_gbar()}});
  out.push_back({Notation::left_leibniz, {M::alpha_l, A::op_phi}, {sum_gbar()}});
  out.push_back({Notation::left_leibniz, {M::beta_l, A::op_phi}, {unit_gen(), trace(+1)}});
  out.push_back({Notation::left_leibniz, {M::alpha_l, A::op_theta}, {sum_gbar(), trace(-1)}});
  out.push_back({Notation::left_leibniz, {M::beta_l, A::op_theta}, {unit_gen()}});
  out.push_back({Notation::left_leibniz, {M::eps_l, A::unit_sharp_gen_u}, {opg(OpFamily::theta)}});
  out.push_back(
      {Notation::left_leibniz, {M::eps_l, A::unit_sharp_gen_u}, {opg(OpFamily::phi), optrace(-1)}});
  out.push_back({Notation::left_leibniz, {M::tau, A::unit_sharp_gen_u}, {sum_gbar(), trace(-1)}});
  out.push_back({Notation::left_leibniz, {M::tau, A::alpha_l_of_op_phi}, {unit_gen()}});
  out.push_back(
      {Notation::left_leibniz, {M::tau, A::alpha_l_of_op_theta}, {unit_gen(), trace(-1)}});
  out.push_back(
      {Notation::left_leibniz, {M::tau_squared, A::unit_sharp_gen_u}, {unit_gen(), trace(-1)}});
  return out;
}

GeneratorFormula remark_square_formula() {
  using K = FormulaTerm::Kind;
  return {Notation::phase_space,
          {FormulaLhs::Map::tau_squared, FormulaLhs::Arg::unit_sharp_gen_u},
          {FormulaTerm{K::unit_sharp_gen, +1, HSym::Gbar, OpFamily::theta},
           FormulaTerm{K::trace_sharp_unit, -1, HSym::Gbar, OpFamily::theta}}};
}

}  // namespace ydforge
