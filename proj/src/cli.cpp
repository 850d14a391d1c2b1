#include "ydforge/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "ydforge/algebroid.hpp"
#include "ydforge/fixtures.hpp"
#include "ydforge/io.hpp"

namespace ydforge {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDegreeCap = 3;

LeibnizAlgebra resolve_algebra(const std::string& spec) {
  if (std::filesystem::exists(spec)) return load_algebra(spec);
  if (const Fixture* fx = find_fixture(spec)) return fx->alg;
  throw AlgebraParseError("no such file or built-in fixture: '" + spec + "'");
}

/// Stored family when the algebra matches a built-in, generic samples
/// otherwise.
std::vector<AutSample> resolve_samples(const LeibnizAlgebra& alg, size_t count, uint64_t seed) {
  for (const Fixture& fx : builtin_fixtures()) {
    if (fx.alg.n != alg.n || fx.alg.chirality != alg.chirality) continue;
    bool same = true;
    for (int k = 0; same && k < alg.n; ++k)
      for (int i = 0; same && i < alg.n; ++i)
        for (int j = 0; same && j < alg.n; ++j)
          same = fx.alg.c_at(k, i, j) == alg.c_at(k, i, j);
    if (same) return sample_automorphisms(fx, count, seed);
  }
  return generic_automorphisms(alg, count, seed);
}

void write_report(const Report& rep, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to '" + path + "'");
  out << rep.to_jsonl();
}

int finish_suite(const Report& rep, const std::string& report_path) {
  std::cout << rep.to_console();
  write_report(rep, report_path);
  std::cout << (rep.all_pass() ? "all identities hold" : "FAILURES present") << " ("
            << rep.total_instances() << " instances)\n";
  return rep.all_pass() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"exact symbolic checker for enveloping-algebra symmetries of Leibniz algebras"};
  app.require_subcommand(1);

  std::string algebra_spec, report_path, mode_str = "groebner", presentation = "theta";
  std::string u_expr, f_expr;
  int max_degree = 3, degree_cap = 12;
  uint64_t seed = 0;
  int flag_k = 0, flag_i = 0, flag_j = 0;
  double step = 1e-4, tol = 1e-6;

  auto add_algebra = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", algebra_spec, "algebra file or built-in fixture name")
        ->required();
  };

  CLI::App* check = app.add_subcommand("check-leibniz", "validate the Leibniz identity");
  add_algebra(check);

  CLI::App* quot = app.add_subcommand("lie-quotient", "compute the maximal Lie quotient");
  add_algebra(quot);

  CLI::App* grob = app.add_subcommand("groebner", "print the reduced automorphism-ideal basis");
  add_algebra(grob);
  grob->add_option("--degree-cap", degree_cap, "intermediate degree bound");

  CLI::App* pair_cmd = app.add_subcommand("pairing", "evaluate the pairing of a U and an H element");
  add_algebra(pair_cmd);
  pair_cmd->add_option("--u", u_expr, "element of U, e.g. 'x1*x2 - 2'")->required();
  pair_cmd->add_option("--f", f_expr, "element of the generator ring, e.g. 'G[2,2]'")->required();

  CLI::App* yd = app.add_subcommand("yd-verify", "run the Yetter-Drinfeld verification suite");
  add_algebra(yd);
  yd->add_option("--max-degree", max_degree, "degree cap for U-side monomials");
  yd->add_option("--mode", mode_str, "groebner|eval");
  yd->add_option("--seed", seed, "sampling seed for eval mode");
  yd->add_option("--report", report_path, "write a JSON-lines report");
  yd->add_option("--degree-cap", degree_cap, "Groebner intermediate degree bound");

  CLI::App* abv = app.add_subcommand("algebroid-verify", "verify the Hopf algebroid identities");
  add_algebra(abv);
  abv->add_option("--presentation", presentation, "phi|theta|phase-space");
  abv->add_option("--max-degree", max_degree, "degree cap for U-side monomials");
  abv->add_option("--seed", seed, "unused; accepted for uniform invocation");
  abv->add_option("--report", report_path, "write a JSON-lines report");
  abv->add_option("--degree-cap", degree_cap, "Groebner intermediate degree bound");

  CLI::App* abp = app.add_subcommand("algebroid-print", "print the structure maps on generators");
  abp->add_option("--algebra", algebra_spec, "also instantiate on this algebra");

  CLI::App* numcheck = app.add_subcommand("numeric-check", "finite-difference flow check");
  add_algebra(numcheck);
  numcheck->add_option("--k", flag_k, "flow generator index (1-based; 0 = all)");
  numcheck->add_option("--i", flag_i, "row index (0 = all)");
  numcheck->add_option("--j", flag_j, "column index (0 = all)");
  numcheck->add_option("--step", step, "finite-difference step");
  numcheck->add_option("--tol", tol, "acceptance tolerance on the residual");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (check->parsed()) {
      const LeibnizAlgebra alg = resolve_algebra(algebra_spec);
      if (auto v = find_leibniz_violation(alg)) {
        std::cout << "leibniz identity fails: " << v->describe() << "\n";
        return kExitVerificationFailed;
      }
      std::cout << "leibniz identity holds (" << to_string(alg.chirality) << ", n=" << alg.n
                << ")\n";
      return kExitOk;
    }

    if (quot->parsed()) {
      const LeibnizAlgebra alg = resolve_algebra(algebra_spec);
      if (!check_leibniz(alg)) {
        std::cout << "input is not a Leibniz algebra\n";
        return kExitVerificationFailed;
      }
      const LieQuotient lq = lie_quotient(alg);
      std::cout << "m = " << lq.m << "\n";
      for (size_t i = 0; i < lq.kernel_basis.size(); ++i) {
        std::cout << "kernel[" << i + 1 << "] =";
        for (int r = 0; r < alg.n; ++r) std::cout << " " << lq.kernel_basis[i](r).str();
        std::cout << "\n";
      }
      for (int k = 0; k < lq.m; ++k)
        for (int i = 0; i < lq.m; ++i)
          for (int j = 0; j < lq.m; ++j)
            if (!lq.c_lie[static_cast<size_t>(k)](i, j).is_zero())
              std::cout << "C[" << k + 1 << "][" << i + 1 << "," << j + 1
                        << "] = " << lq.c_lie[static_cast<size_t>(k)](i, j).str() << "\n";
      return kExitOk;
    }

    if (grob->parsed()) {
      const LeibnizAlgebra alg = resolve_algebra(algebra_spec);
      const GroebnerBasis gb = buchberger(aut_ideal_generators(alg), GroebnerOptions{degree_cap});
      std::cout << "reduced basis (" << gb.size() << " generators, " << gb.order() << ")\n";
      for (const Poly& g : gb.generators()) std::cout << g.str(alg.n) << "\n";
      return kExitOk;
    }

    if (pair_cmd->parsed()) {
      const LeibnizAlgebra alg = resolve_algebra(algebra_spec);
      if (!check_leibniz(alg)) throw AlgebraParseError("input is not a Leibniz algebra");
      const LieQuotient lq = lie_quotient(alg);
      const PairingContext ctx(alg, lq, nullptr);
      const PBWElement u = pbw_from_words(lq, parse_u_words(u_expr, lq.m));
      const Poly f = parse_poly(f_expr, alg.n);
      std::cout << ctx.pair_value(u, f).str() << "\n";
      return kExitOk;
    }

    if (yd->parsed()) {
      const LeibnizAlgebra alg = resolve_algebra(algebra_spec);
      SmashContext ctx(alg, GroebnerOptions{degree_cap});
      const VerifyMode mode = parse_mode(mode_str);
      std::vector<AutSample> samples;
      if (mode == VerifyMode::eval) samples = resolve_samples(alg, 20, seed);
      const Report rep = verify_yd_suite(ctx, max_degree, mode, samples);
      return finish_suite(rep, report_path);
    }

    if (abv->parsed()) {
      const LeibnizAlgebra alg = resolve_algebra(algebra_spec);
      Report rep;
      if (presentation == "phase-space") {
        rep = verify_phase_space(alg, GroebnerOptions{degree_cap});
      } else if (presentation == "phi" || presentation == "theta") {
        SmashContext ctx(alg, GroebnerOptions{degree_cap});
        const Algebroid ab = Algebroid::build(ctx);
        rep = verify_algebroid(ab, std::min(max_degree, 2));
      } else {
        throw AlgebraParseError("unknown presentation '" + presentation + "'");
      }
      return finish_suite(rep, report_path);
    }

    if (abp->parsed()) {
      std::cout << "left convention:\n";
      for (const GeneratorFormula& f : algebroid_generator_formulas())
        std::cout << "  " << f.render() << "\n";
      std::cout << "phase-space convention (through the adapter):\n";
      for (const GeneratorFormula& f : algebroid_generator_formulas())
        std::cout << "  " << convention_adapter(f).render() << "\n";
      std::cout << "antipode square, minus-trace convention:\n  "
                << remark_square_formula().render() << "\n";
      if (!algebra_spec.empty()) {
        const LeibnizAlgebra alg = resolve_algebra(algebra_spec);
        SmashContext ctx(alg, GroebnerOptions{degree_cap});
        const Algebroid ab = Algebroid::build(ctx);
        std::cout << "instantiated on " << algebra_spec << ":\n";
        for (int j = 0; j < alg.n; ++j) {
          const PBWElement xj = pbw_of_h_basis(ctx.lq(), j);
          std::cout << "  beta_R(x" << j + 1 << ") = " << ab.beta_r(xj).str(alg.n) << "\n";
          std::cout << "  tau(1 # x" << j + 1 << ") = "
                    << ab.antipode_tau(ab.alpha_r(xj)).str(alg.n) << "\n";
          std::cout << "  eps_L(1 # x" << j + 1 << ") = " << ab.eps_l(ab.alpha_r(xj)).u.str()
                    << "  (theta generators)\n";
        }
      }
      return kExitOk;
    }

    if (numcheck->parsed()) {
      const LeibnizAlgebra alg = resolve_algebra(algebra_spec);
      double max_residual = 0.0;
      const auto ks = flag_k ? std::vector<int>{flag_k} : [&] {
        std::vector<int> v;
        for (int k = 1; k <= alg.n; ++k) v.push_back(k);
        return v;
      }();
      for (int k : ks)
        for (int i = flag_i ? flag_i : 1; i <= (flag_i ? flag_i : alg.n); ++i)
          for (int j = flag_j ? flag_j : 1; j <= (flag_j ? flag_j : alg.n); ++j) {
            const double r = numeric_differential_check(alg, k, i, j, step);
            max_residual = std::max(max_residual, r);
            std::cout << "k=" << k << " entry(" << i << "," << j << ") residual " << r << "\n";
          }
      std::cout << "max residual " << max_residual << " (tol " << tol << ")\n";
      return max_residual <= tol ? kExitOk : kExitVerificationFailed;
    }
  } catch (const DegreeCapExceeded& e) {
    std::cerr << "degree-cap abort: " << e.what()
              << " (raise --degree-cap to continue; no result was produced)\n";
    return kExitDegreeCap;
  } catch (const AlgebraParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }

  return kExitBadInput;
}

}  // namespace ydforge
