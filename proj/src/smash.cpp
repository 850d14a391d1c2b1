#include "ydforge/smash.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace ydforge {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmp_smash_key(const SmashElement::Entry& a, const SmashElement::Entry& b) {
  const int cu = pbw_cmp(a.u, b.u);
  if (cu != 0) return cu;
  return Monomial::cmp(a.h, b.h);
}

const LeibnizAlgebra& require_leibniz(const LeibnizAlgebra& alg) {
  if (auto v = find_leibniz_violation(alg))
    throw std::invalid_argument("not a Leibniz algebra: " + v->describe());
  return alg;
}

}  // namespace

SmashElement SmashElement::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return cmp_smash_key(a, b) > 0; });
  SmashElement s;
  for (auto& e : entries) {
    if (e.coef.is_zero()) continue;
    if (!s.entries_.empty() && cmp_smash_key(s.entries_.back(), e) == 0) {
      s.entries_.back().coef += e.coef;
      if (s.entries_.back().coef.is_zero()) s.entries_.pop_back();
    } else {
      s.entries_.push_back(std::move(e));
    }
  }
  return s;
}

SmashElement SmashElement::of(const Poly& h, const PBWElement& u) {
  std::vector<Entry> es;
  for (const Term& th : h.terms())
    for (const auto& tu : u.terms()) es.push_back({th.mono, tu.mono, th.coef * tu.coef});
  return from_entries(std::move(es));
}

SmashElement SmashElement::operator+(const SmashElement& o) const {
  std::vector<Entry> es = entries_;
  es.insert(es.end(), o.entries_.begin(), o.entries_.end());
  return from_entries(std::move(es));
}

SmashElement SmashElement::operator-(const SmashElement& o) const {
  std::vector<Entry> es = entries_;
  for (const Entry& e : o.entries_) es.push_back({e.h, e.u, -e.coef});
  return from_entries(std::move(es));
}

SmashElement SmashElement::scaled(const Rational& c) const {
  if (c.is_zero()) return SmashElement();
  SmashElement s = *this;
  for (auto& e : s.entries_) e.coef *= c;
  return s;
}

std::vector<std::pair<PBWMonomial, Poly>> SmashElement::by_pbw() const {
  std::map<PBWMonomial, std::vector<Term>> groups;
  for (const Entry& e : entries_) groups[e.u].push_back({e.h, e.coef});
  std::vector<std::pair<PBWMonomial, Poly>> out;
  for (auto& [u, terms] : groups) out.push_back({u, Poly::from_terms(std::move(terms))});
  return out;
}

std::string SmashElement::str(int n) const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, h] : by_pbw()) {
    if (!first) os << " + ";
    os << "(" << h.str(n) << ") # " << PBWElement::term(u, Rational(1)).str();
    first = false;
  }
  return os.str();
}

VerifyMode parse_mode(const std::string& text) {
  if (text == "groebner") return VerifyMode::groebner;
  if (text == "eval") return VerifyMode::eval;
  throw std::invalid_argument("unknown mode '" + text + "' (expected groebner|eval)");
}

struct SmashContext::Memo {
  std::mutex mutex;
  std::map<PBWMonomial, SmashElement> coaction;
};

SmashContext::~SmashContext() = default;

SmashContext::SmashContext(const LeibnizAlgebra& alg, const GroebnerOptions& opts)
    : alg_(require_leibniz(alg)),
      lq_(lie_quotient(alg_)),
      oaut_(OAut::build(alg_, opts)),
      pairing_(alg_, lq_, &oaut_),
      memo_(std::make_unique<Memo>()) {
  init();
}

SmashContext::SmashContext(const LeibnizAlgebra& alg, const LieQuotient& lq,
                           const GroebnerOptions& opts)
    : alg_(require_leibniz(alg)),
      lq_(lq),
      oaut_(OAut::build(alg_, opts)),
      pairing_(alg_, lq_, &oaut_),
      memo_(std::make_unique<Memo>()) {
  init();
}

void SmashContext::init() {
  const int n = alg_.n;
  coaction_table_.resize(static_cast<size_t>(lq_.m));
  for (int a = 0; a < lq_.m; ++a) {
    std::vector<SmashElement::Entry> es;
    for (int k = 0; k < n; ++k) {
      const Rational& lk = lq_.lift(k, a);
      if (lk.is_zero()) continue;
      for (int i = 0; i < n; ++i) {
        const int id = alg_.chirality == Chirality::left ? gbar_id(i + 1, k + 1, n)
                                                         : g_id(i + 1, k + 1, n);
        const PBWElement xi = pbw_of_h_basis(lq_, i);
        for (const auto& t : xi.terms())
          es.push_back({Monomial::var(id), t.mono, lk * t.coef});
      }
    }
    coaction_table_[static_cast<size_t>(a)] = SmashElement::from_entries(std::move(es));
  }
}

const SmashElement& SmashContext::coaction_generator(int a) const {
  return coaction_table_.at(static_cast<size_t>(a));
}

SmashElement SmashContext::coaction_mono(const PBWMonomial& u) const {
  if (u.empty()) return SmashElement::unit();
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->coaction.find(u);
    if (it != memo_->coaction.end()) return it->second;
  }
  // reversed product of generator coactions
  SmashElement acc = coaction_generator(u.back());
  for (auto it = u.rbegin() + 1; it != u.rend(); ++it)
    acc = smash_mul(acc, coaction_generator(*it));
  std::lock_guard<std::mutex> lock(memo_->mutex);
  memo_->coaction.emplace(u, acc);
  return acc;
}

SmashElement SmashContext::coaction(const PBWElement& u) const {
  SmashElement acc;
  for (const auto& t : u.terms()) acc += coaction_mono(t.mono).scaled(t.coef);
  return acc;
}

SmashElement SmashContext::smash_mul(const SmashElement& a, const SmashElement& b) const {
  const int n = alg_.n;
  std::vector<SmashElement::Entry> es;
  for (const auto& ea : a.entries())
    for (const auto& eb : b.entries()) {
      // (h # u)(k # w) = sum h k_(1) # (u <| k_(2)) w
      for (const auto& ck : coproduct_h_mono(eb.h, n).entries()) {
        const PBWElement acted = pairing_.act_mono(ea.u, ck.right);
        if (acted.is_zero()) continue;
        const PBWElement tail = pbw_mul(lq_, acted, PBWElement::term(eb.u, Rational(1)));
        const Monomial hh = ea.h * ck.left;
        const Rational c = ea.coef * eb.coef * ck.coef;
        for (const auto& t : tail.terms()) es.push_back({hh, t.mono, c * t.coef});
      }
    }
  return SmashElement::from_entries(std::move(es));
}

PBWElement SmashContext::extended_act(const PBWElement& a, const SmashElement& s) const {
  PBWElement acc;
  for (const auto& e : s.entries()) {
    const PBWElement acted = pairing_.act(a, Poly::term(e.h, Rational(1)));
    if (acted.is_zero()) continue;
    acc += pbw_mul(lq_, acted, PBWElement::term(e.u, Rational(1))).scaled(e.coef);
  }
  return acc;
}

bool SmashContext::is_zero_mod(const SmashElement& s) const {
  for (const auto& [u, h] : s.by_pbw()) {
    (void)u;
    if (!normal_form(h, oaut_.gb).is_zero()) return false;
  }
  return true;
}

bool SmashContext::is_zero_eval(const SmashElement& s, const std::vector<AutSample>& samples) const {
  if (samples.empty()) throw std::invalid_argument("eval mode requires automorphism samples");
  for (const auto& [u, h] : s.by_pbw()) {
    (void)u;
    for (const AutSample& sm : samples)
      if (!evaluate(h, sm.m, sm.minv, alg_.n).is_zero()) return false;
  }
  return true;
}

SmashElement h_mul_smash(const Monomial& k, const SmashElement& s) {
  std::vector<SmashElement::Entry> es;
  for (const auto& e : s.entries()) es.push_back({k * e.h, e.u, e.coef});
  return SmashElement::from_entries(std::move(es));
}

namespace {

// (H, H, PBW) triples for the coassociativity legs
struct TripleElement {
  struct Entry {
    Monomial h1, h2;
    PBWMonomial u;
    Rational coef;
  };
  std::vector<Entry> entries;

  static TripleElement collect(std::vector<Entry> es) {
    auto cmp = [](const Entry& a, const Entry& b) {
      const int cu = pbw_cmp(a.u, b.u);
      if (cu != 0) return cu > 0;
      const int c1 = Monomial::cmp(a.h1, b.h1);
      if (c1 != 0) return c1 > 0;
      return Monomial::cmp(a.h2, b.h2) > 0;
    };
    std::sort(es.begin(), es.end(), cmp);
    TripleElement t;
    for (auto& e : es) {
      if (e.coef.is_zero()) continue;
      if (!t.entries.empty()) {
        Entry& last = t.entries.back();
        if (last.u == e.u && last.h1 == e.h1 && last.h2 == e.h2) {
          last.coef += e.coef;
          if (last.coef.is_zero()) t.entries.pop_back();
          continue;
        }
      }
      t.entries.push_back(std::move(e));
    }
    return t;
  }

  TripleElement minus(const TripleElement& o) const {
    std::vector<Entry> es = entries;
    for (const Entry& e : o.entries) es.push_back({e.h1, e.h2, e.u, -e.coef});
    return collect(std::move(es));
  }

  /// Per PBW monomial, the H (x) H coefficient as a PolyTensor.
  std::vector<std::pair<PBWMonomial, PolyTensor>> by_pbw() const {
    std::map<PBWMonomial, std::vector<PolyTensor::Entry>> groups;
    for (const Entry& e : entries) groups[e.u].push_back({e.h1, e.h2, e.coef});
    std::vector<std::pair<PBWMonomial, PolyTensor>> out;
    for (auto& [u, es] : groups)
      out.push_back({u, PolyTensor::from_entries(std::move(es))});
    return out;
  }
};

bool triple_zero_mod(const TripleElement& t, const GroebnerBasis& gb) {
  for (const auto& [u, tensor] : t.by_pbw()) {
    (void)u;
    if (!tensor_reduces_to_zero(tensor, gb)) return false;
  }
  return true;
}

bool triple_zero_eval(const TripleElement& t, const std::vector<AutSample>& samples, int n) {
  for (const auto& [u, tensor] : t.by_pbw()) {
    (void)u;
    for (const AutSample& s1 : samples)
      for (const AutSample& s2 : samples) {
        Rational total(0);
        for (const auto& e : tensor.entries())
          total += e.coef * evaluate(Poly::term(e.left, Rational(1)), s1.m, s1.minv, n) *
                   evaluate(Poly::term(e.right, Rational(1)), s2.m, s2.minv, n);
        if (!total.is_zero()) return false;
      }
  }
  return true;
}

std::string pbw_mono_str(const PBWMonomial& m) {
  return PBWElement::term(m, Rational(1)).str();
}

}  // namespace

Report verify_yd_suite(const SmashContext& ctx, int degcap, VerifyMode mode,
                       const std::vector<AutSample>& samples, int threads) {
  if (mode == VerifyMode::eval && samples.empty())
    throw std::invalid_argument("verify_yd_suite: eval mode requires automorphism samples");
  const int n = ctx.n();
  const auto umonos = pbw_monomials_up_to(ctx.m(), degcap);

  // f ranges over all generators and degree-2 generator monomials
  std::vector<Monomial> fmonos;
  for (int id = 0; id < 2 * n * n; ++id) fmonos.push_back(Monomial::var(id));
  for (int id1 = 0; id1 < 2 * n * n; ++id1)
    for (int id2 = id1; id2 < 2 * n * n; ++id2)
      fmonos.push_back(Monomial::var(id1) * Monomial::var(id2));

  auto smash_zero = [&](const SmashElement& s) {
    return mode == VerifyMode::groebner ? ctx.is_zero_mod(s) : ctx.is_zero_eval(s, samples);
  };

  Report rep;

  {  // (1) images of the coaction commute with 1 # U
    const auto t0 = std::chrono::steady_clock::now();
    IdentityCheck check("yd.imacom", "coaction images commute with 1 # U");
    std::vector<std::pair<size_t, size_t>> idx;
    for (size_t a = 0; a < umonos.size(); ++a)
      for (size_t b = 0; b < umonos.size(); ++b) idx.push_back({a, b});
    auto results = parallel_map(
        idx.size(),
        [&](size_t i) -> InstanceResult {
          const PBWMonomial& z = umonos[idx[i].first];
          const PBWMonomial& v = umonos[idx[i].second];
          const SmashElement zs = SmashElement::of(Poly::constant(Rational(1)),
                                                   PBWElement::term(z, Rational(1)));
          const SmashElement lv = ctx.coaction_mono(v);
          const SmashElement diff = ctx.smash_mul(zs, lv) - ctx.smash_mul(lv, zs);
          if (smash_zero(diff)) return {};
          return {false, "z=" + pbw_mono_str(z) + ", v=" + pbw_mono_str(v) +
                             ", residual " + diff.str(n)};
        },
        threads);
    for (const auto& r : results) check.count_lazy(r.ok, [&] { return r.witness; });
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  {  // (2) coassociativity
    const auto t0 = std::chrono::steady_clock::now();
    IdentityCheck check("yd.coassoc", "coaction coassociativity");
    auto results = parallel_map(
        umonos.size(),
        [&](size_t i) -> InstanceResult {
          const PBWMonomial& u = umonos[i];
          const SmashElement lu = ctx.coaction_mono(u);
          std::vector<TripleElement::Entry> lhs, rhs;
          for (const auto& e : lu.entries())
            for (const auto& ch : coproduct_h_mono(e.h, n).entries())
              lhs.push_back({ch.left, ch.right, e.u, e.coef * ch.coef});
          for (const auto& e : lu.entries()) {
            const SmashElement inner = ctx.coaction_mono(e.u);
            for (const auto& e2 : inner.entries())
              rhs.push_back({e.h, e2.h, e2.u, e.coef * e2.coef});
          }
          const TripleElement diff =
              TripleElement::collect(std::move(lhs)).minus(TripleElement::collect(std::move(rhs)));
          const bool ok = mode == VerifyMode::groebner
                              ? triple_zero_mod(diff, ctx.oaut().gb)
                              : triple_zero_eval(diff, samples, n);
          if (ok) return {};
          return {false, "u=" + pbw_mono_str(u)};
        },
        threads);
    for (const auto& r : results) check.count_lazy(r.ok, [&] { return r.witness; });
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  {  // (2') counitality, exact
    const auto t0 = std::chrono::steady_clock::now();
    IdentityCheck check("yd.counit", "coaction counitality");
    for (const PBWMonomial& u : umonos) {
      PBWElement out;
      for (const auto& e : ctx.coaction_mono(u).entries())
        out += PBWElement::term(e.u, e.coef * eps_mono(e.h, n));
      const bool ok = out == PBWElement::term(u, Rational(1));
      check.count_lazy(ok, [&] {
        return "u=" + pbw_mono_str(u) + ", (eps (x) id) lambda(u) = " + out.str();
      });
    }
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  {  // (3) Yetter-Drinfeld compatibility
    const auto t0 = std::chrono::steady_clock::now();
    IdentityCheck check("yd.compat", "Yetter-Drinfeld compatibility in smash form");
    std::vector<std::pair<size_t, size_t>> idx;
    for (size_t a = 0; a < umonos.size(); ++a)
      for (size_t b = 0; b < fmonos.size(); ++b) idx.push_back({a, b});
    auto results = parallel_map(
        idx.size(),
        [&](size_t i) -> InstanceResult {
          const PBWMonomial& u = umonos[idx[i].first];
          const Monomial& f = fmonos[idx[i].second];
          SmashElement lhs;
          for (const auto& cf : coproduct_h_mono(f, n).entries()) {
            const PBWElement acted = ctx.pairing().act_mono(u, cf.left);
            if (acted.is_zero()) continue;
            lhs += h_mul_smash(cf.right, ctx.coaction(acted)).scaled(cf.coef);
          }
          const SmashElement rhs = ctx.smash_mul(
              ctx.coaction_mono(u), SmashElement::of(Poly::term(f, Rational(1)), PBWElement::unit()));
          const SmashElement diff = lhs - rhs;
          if (smash_zero(diff)) return {};
          return {false, "u=" + pbw_mono_str(u) + ", f=" + monomial_str(f, n) +
                             ", residual " + diff.str(n)};
        },
        threads);
    for (const auto& r : results) check.count_lazy(r.ok, [&] { return r.witness; });
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  {  // (4) braided commutativity, exact in U
    const auto t0 = std::chrono::steady_clock::now();
    IdentityCheck check("yd.braided", "braided commutativity through the extended action");
    std::vector<std::pair<size_t, size_t>> idx;
    for (size_t a = 0; a < umonos.size(); ++a)
      for (size_t b = 0; b < umonos.size(); ++b) idx.push_back({a, b});
    auto results = parallel_map(
        idx.size(),
        [&](size_t i) -> InstanceResult {
          const PBWMonomial& u = umonos[idx[i].first];
          const PBWMonomial& v = umonos[idx[i].second];
          const PBWElement lhs =
              ctx.extended_act(PBWElement::term(u, Rational(1)), ctx.coaction_mono(v));
          const PBWElement rhs = pbw_mul_mono(ctx.lq(), v, u);
          if (lhs == rhs) return {};
          return {false, "u=" + pbw_mono_str(u) + ", v=" + pbw_mono_str(v) + ", u <| lambda(v) = " +
                             lhs.str() + " but v u = " + rhs.str()};
        },
        threads);
    for (const auto& r : results) check.count_lazy(r.ok, [&] { return r.witness; });
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  {  // (5) antimultiplicativity
    const auto t0 = std::chrono::steady_clock::now();
    IdentityCheck check("yd.antimult", "coaction antimultiplicativity");
    std::vector<std::pair<size_t, size_t>> idx;
    for (size_t a = 0; a < umonos.size(); ++a)
      for (size_t b = 0; b < umonos.size(); ++b) idx.push_back({a, b});
    auto results = parallel_map(
        idx.size(),
        [&](size_t i) -> InstanceResult {
          const PBWMonomial& u = umonos[idx[i].first];
          const PBWMonomial& v = umonos[idx[i].second];
          const SmashElement lhs = ctx.coaction(pbw_mul_mono(ctx.lq(), u, v));
          const SmashElement rhs = ctx.smash_mul(ctx.coaction_mono(v), ctx.coaction_mono(u));
          const SmashElement diff = lhs - rhs;
          if (smash_zero(diff)) return {};
          return {false, "u=" + pbw_mono_str(u) + ", v=" + pbw_mono_str(v) + ", residual " +
                             diff.str(n)};
        },
        threads);
    for (const auto& r : results) check.count_lazy(r.ok, [&] { return r.witness; });
    rep.records.push_back(check.finish(ms_since(t0)));
  }

  return rep;
}

double numeric_differential_check(const LeibnizAlgebra& alg, int k, int i, int j, double step) {
  if (!is_lie(alg)) throw std::invalid_argument("numeric_differential_check: requires a Lie algebra");
  if (k < 1 || k > alg.n || i < 1 || i > alg.n || j < 1 || j > alg.n)
    throw std::out_of_range("numeric_differential_check: index out of range");
  const int n = alg.n;

  // matrix of ad x_k over the rationals, for the exact nilpotency test
  RatMat ad(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) ad(r, c) = alg.c_at(r, k - 1, c);
  int nilpotency = -1;
  RatMat power = rat_identity(n);
  for (int p = 1; p <= n; ++p) {
    power = RatMat(power * ad);
    if (is_zero(power)) { nilpotency = p; break; }
  }

  Eigen::MatrixXd add(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) add(r, c) = ad(r, c).to_double();

  auto flow_entry = [&](double t) -> double {
    if (nilpotency > 0) {
      // exact finite sum: exp(tN) = sum_{r<p} (tN)^r / r!
      Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(n, n);
      Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
      for (int r = 1; r < nilpotency; ++r) {
        term = term * add * (t / r);
        acc += term;
      }
      return acc(i - 1, j - 1);
    }
    Eigen::MatrixXd scaled = add * t;
    return scaled.exp()(i - 1, j - 1);
  };

  const double fd = (flow_entry(step) - flow_entry(-step)) / (2.0 * step);
  return std::abs(fd - alg.c_at(i - 1, k - 1, j - 1).to_double());
}

}  // namespace ydforge
