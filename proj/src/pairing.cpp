#include "ydforge/pairing.hpp"

#include <chrono>
#include <sstream>

namespace ydforge {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string pbw_mono_str(const PBWMonomial& m) {
  return PBWElement::term(m, Rational(1)).str();
}

}  // namespace

Rational eps_mono(const Monomial& m, int n) {
  for (const auto& [id, e] : m.factors()) {
    (void)e;
    const GenVar v = GenVar::from_id(id, n);
    if (v.upper != v.lower) return Rational(0);
  }
  return Rational(1);
}

struct PairingContext::Memo {
  std::mutex mutex;
  std::map<std::pair<PBWMonomial, std::vector<Monomial::Factor>>, Rational> pair;
  std::map<std::pair<PBWMonomial, std::vector<Monomial::Factor>>, PBWElement> act;
};

PairingContext::~PairingContext() = default;

PairingContext::PairingContext(const LeibnizAlgebra& alg, const LieQuotient& lq, const OAut* oaut)
    : alg_(&alg), lq_(&lq), oaut_(oaut), memo_(std::make_unique<Memo>()) {
  const int n = alg.n;
  base_h_.reserve(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    RatMat b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        b(i, j) = alg.chirality == Chirality::left ? alg.c_at(i, k, j) : -alg.c_at(i, j, k);
    base_h_.push_back(std::move(b));
  }
  base_.reserve(static_cast<size_t>(lq.m));
  for (int a = 0; a < lq.m; ++a) {
    RatMat b = RatMat::Constant(n, n, Rational(0));
    for (int k = 0; k < n; ++k) {
      const Rational& c = lq.lift(k, a);
      if (c.is_zero()) continue;
      b += base_h_[static_cast<size_t>(k)] * c;
    }
    base_.push_back(std::move(b));
  }
}

const OAut& PairingContext::oaut() const {
  if (!oaut_) throw std::logic_error("PairingContext: no automorphism ideal attached");
  return *oaut_;
}

Rational PairingContext::base_value(int gen, const GenVar& v) const {
  const Rational& raw = base_[static_cast<size_t>(gen)](v.upper - 1, v.lower - 1);
  return v.kind == 0 ? raw : -raw;
}

// <x, v f'> = <x, v> eps(f') + eps(v) <x, f'>
Rational PairingContext::pair_deg1(int gen, const Monomial& f) const {
  const int n = alg_->n;
  if (f.is_one()) return Rational(0);
  const auto& [id, e] = f.factors().front();
  const GenVar v = GenVar::from_id(id, n);
  const Monomial rest = f.divide_by(Monomial::var(id));
  (void)e;
  Rational out = base_value(gen, v) * eps_mono(rest, n);
  if (v.upper == v.lower) out += pair_deg1(gen, rest);
  return out;
}

Rational PairingContext::pair_mono(const PBWMonomial& u, const Monomial& f) const {
  if (u.empty()) return eps_mono(f, alg_->n);
  if (u.size() == 1) return pair_deg1(u.front(), f);
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->pair.find({u, f.factors()});
    if (it != memo_->pair.end()) return it->second;
  }
  const PBWMonomial rest(u.begin() + 1, u.end());
  Rational total(0);
  for (const auto& entry : coproduct_h_mono(f, alg_->n).entries()) {
    const Rational head = pair_deg1(u.front(), entry.left);
    if (head.is_zero()) continue;
    total += entry.coef * head * pair_mono(rest, entry.right);
  }
  std::lock_guard<std::mutex> lock(memo_->mutex);
  memo_->pair.emplace(std::make_pair(u, f.factors()), total);
  return total;
}

Rational PairingContext::pair_value(const PBWElement& u, const Poly& f) const {
  Rational total(0);
  for (const auto& tu : u.terms())
    for (const auto& tf : f.terms()) total += tu.coef * tf.coef * pair_mono(tu.mono, tf.mono);
  return total;
}

Rational PairingContext::pair_word_deg1(int letter, const Monomial& f) const {
  const int n = alg_->n;
  if (f.is_one()) return Rational(0);
  const auto& [id, e] = f.factors().front();
  (void)e;
  const GenVar v = GenVar::from_id(id, n);
  const Monomial rest = f.divide_by(Monomial::var(id));
  const Rational& raw = base_h_[static_cast<size_t>(letter)](v.upper - 1, v.lower - 1);
  Rational out = (v.kind == 0 ? raw : -raw) * eps_mono(rest, n);
  if (v.upper == v.lower) out += pair_word_deg1(letter, rest);
  return out;
}

Rational PairingContext::pair_word(const std::vector<int>& hword, const Monomial& f) const {
  if (hword.empty()) return eps_mono(f, alg_->n);
  if (hword.size() == 1) return pair_word_deg1(hword.front(), f);
  const std::vector<int> rest(hword.begin() + 1, hword.end());
  Rational total(0);
  for (const auto& entry : coproduct_h_mono(f, alg_->n).entries()) {
    const Rational head = pair_word_deg1(hword.front(), entry.left);
    if (head.is_zero()) continue;
    total += entry.coef * head * pair_word(rest, entry.right);
  }
  return total;
}

PBWElement PairingContext::act_mono(const PBWMonomial& u, const Monomial& f) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->act.find({u, f.factors()});
    if (it != memo_->act.end()) return it->second;
  }
  std::vector<PBWTerm> ts;
  for (const auto& e : coproduct_u(PBWElement::term(u, Rational(1))).entries()) {
    const Rational v = pair_mono(e.left, f);
    if (v.is_zero()) continue;
    ts.push_back({e.right, v * e.coef});
  }
  PBWElement out = PBWElement::from_terms(std::move(ts));
  std::lock_guard<std::mutex> lock(memo_->mutex);
  memo_->act.emplace(std::make_pair(u, f.factors()), out);
  return out;
}

PBWElement PairingContext::act(const PBWElement& u, const Poly& f) const {
  PBWElement acc;
  for (const auto& tu : u.terms())
    for (const auto& tf : f.terms())
      acc += act_mono(tu.mono, tf.mono).scaled(tu.coef * tf.coef);
  return acc;
}

namespace {

// all monomials of degree <= degcap, enumerated by nondecreasing variable id
std::vector<Monomial> all_monomials_up_to(int nvars, int degcap) {
  std::vector<Monomial> out;
  std::vector<int> word;
  auto rec = [&](auto&& self, int from, int remaining) -> void {
    std::vector<Monomial::Factor> fs;
    for (int v : word) fs.push_back({v, 1});
    out.push_back(Monomial::from_factors(std::move(fs)));
    if (remaining == 0) return;
    for (int v = from; v < nvars; ++v) {
      word.push_back(v);
      self(self, v, remaining - 1);
      word.pop_back();
    }
  };
  rec(rec, 0, degcap);
  return out;
}

std::vector<int> all_genvar_ids(int n) {
  std::vector<int> ids(static_cast<size_t>(2 * n * n));
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return ids;
}

}  // namespace

Report pairing_welldefined(const PairingContext& ctx, int degcap) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = ctx.n();
  const LeibnizAlgebra& alg = ctx.alg();
  Report rep;

  {
    IdentityCheck check("pairing.kernel", "pairing vanishes on the quotient kernel");
    for (size_t kv = 0; kv < ctx.lq().kernel_basis.size(); ++kv) {
      const RatVec& v = ctx.lq().kernel_basis[kv];
      for (int id : all_genvar_ids(n)) {
        Rational val(0);
        for (int k = 0; k < n; ++k) {
          if (v(k).is_zero()) continue;
          val += v(k) * ctx.pair_word({k}, Monomial::var(id));
        }
        check.count_lazy(val.is_zero(), [&] {
          return "kernel vector " + std::to_string(kv + 1) + " against " +
                 GenVar::from_id(id, n).str() + " pairs to " + val.str();
        });
      }
    }
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  {
    IdentityCheck check("pairing.relators", "pairing vanishes on tensor-algebra relators");
    const std::vector<Monomial> monos = all_monomials_up_to(2 * n * n, degcap);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const Monomial& f : monos) {
          // l_[x_i,x_j] - l_i l_j + l_j l_i against f
          Rational val(0);
          for (int k = 0; k < n; ++k) {
            const Rational& c = alg.c_at(k, i, j);
            if (!c.is_zero()) val += c * ctx.pair_word({k}, f);
          }
          val -= ctx.pair_word({i, j}, f);
          val += ctx.pair_word({j, i}, f);
          check.count_lazy(val.is_zero(), [&] {
            return "relator (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   ") against " + monomial_str(f, n) + " pairs to " + val.str();
          });
        }
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  {
    IdentityCheck check("pairing.ideal", "pairing vanishes on the automorphism ideal");
    const auto monos = pbw_monomials_up_to(ctx.m(), degcap);
    const std::vector<Poly> gens = aut_ideal_generators(alg);
    for (const PBWMonomial& u : monos)
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        const Rational val = ctx.pair_value(PBWElement::term(u, Rational(1)), gens[gi]);
        check.count_lazy(val.is_zero(), [&] {
          return pbw_mono_str(u) + " against ideal generator " + gens[gi].str(n) +
                 " pairs to " + val.str();
        });
      }
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  return rep;
}

Report hopf_pairing_axioms(const PairingContext& ctx, int degcap) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = ctx.n();
  Report rep;
  const auto umonos = pbw_monomials_up_to(ctx.m(), degcap);
  std::vector<Poly> hgens;
  for (int id : all_genvar_ids(n)) hgens.push_back(Poly::variable(id));
  std::vector<Monomial> hmonos = all_monomials_up_to(2 * n * n, 2);

  {
    IdentityCheck check("hopfpair.copU", "<Delta u, h (x) k> matches <u, h k>");
    for (const PBWMonomial& u : umonos) {
      const TensorElement du = coproduct_u(PBWElement::term(u, Rational(1)));
      for (const Poly& h : hgens)
        for (const Poly& k : hgens) {
          Rational lhs(0);
          for (const auto& e : du.entries())
            lhs += e.coef * ctx.pair_value(PBWElement::term(e.left, Rational(1)), h) *
                   ctx.pair_value(PBWElement::term(e.right, Rational(1)), k);
          const Rational rhs = ctx.pair_value(PBWElement::term(u, Rational(1)), h * k);
          check.count_lazy(lhs == rhs, [&] {
            return pbw_mono_str(u) + " with (" + h.str(n) + ", " + k.str(n) + "): " + lhs.str() +
                   " vs " + rhs.str();
          });
        }
    }
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  {
    IdentityCheck check("hopfpair.copH", "<u v, f> matches <u (x) v, Delta f>");
    for (const PBWMonomial& u : umonos)
      for (const PBWMonomial& v : umonos) {
        if (static_cast<int>(u.size() + v.size()) > degcap) continue;
        const PBWElement prod = pbw_mul_mono(ctx.lq(), u, v);
        for (const Monomial& f : hmonos) {
          Rational lhs = ctx.pair_value(prod, Poly::term(f, Rational(1)));
          Rational rhs(0);
          for (const auto& e : coproduct_h_mono(f, n).entries())
            rhs += e.coef * ctx.pair_mono(u, e.left) * ctx.pair_mono(v, e.right);
          check.count_lazy(lhs == rhs, [&] {
            return pbw_mono_str(u) + " * " + pbw_mono_str(v) + " against " + monomial_str(f, n) +
                   ": " + lhs.str() + " vs " + rhs.str();
          });
        }
      }
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  {
    IdentityCheck check("hopfpair.unit", "<1, f> = eps(f) and <u, 1> = eps(u)");
    for (const Monomial& f : hmonos) {
      const Rational lhs = ctx.pair_mono({}, f);
      const Rational rhs = eps_mono(f, n);
      check.count_lazy(lhs == rhs,
                       [&] { return monomial_str(f, n) + ": " + lhs.str() + " vs " + rhs.str(); });
    }
    for (const PBWMonomial& u : umonos) {
      const Rational lhs = ctx.pair_mono(u, Monomial::one());
      const Rational rhs = counit_u(PBWElement::term(u, Rational(1)));
      check.count_lazy(lhs == rhs,
                       [&] { return pbw_mono_str(u) + ": " + lhs.str() + " vs " + rhs.str(); });
    }
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  {
    IdentityCheck check("hopfpair.antipode", "<S u, f> matches <u, S f>");
    for (const PBWMonomial& u : umonos) {
      const PBWElement su = antipode_u(ctx.lq(), PBWElement::term(u, Rational(1)));
      for (const Monomial& f : hmonos) {
        const Poly pf = Poly::term(f, Rational(1));
        const Rational lhs = ctx.pair_value(su, pf);
        const Rational rhs = ctx.pair_value(PBWElement::term(u, Rational(1)), antipode_h(pf, n));
        check.count_lazy(lhs == rhs, [&] {
          return pbw_mono_str(u) + " against " + monomial_str(f, n) + ": " + lhs.str() + " vs " +
                 rhs.str();
        });
      }
    }
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  return rep;
}

}  // namespace ydforge
