#include "ydforge/oaut.hpp"

#include <algorithm>
#include <map>

namespace ydforge {

namespace {

int cmp_entry_key(const PolyTensor::Entry& a, const PolyTensor::Entry& b) {
  const int cl = Monomial::cmp(a.left, b.left);
  if (cl != 0) return cl;
  return Monomial::cmp(a.right, b.right);
}

}  // namespace

PolyTensor PolyTensor::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return cmp_entry_key(a, b) > 0; });
  PolyTensor t;
  for (auto& e : entries) {
    if (e.coef.is_zero()) continue;
    if (!t.entries_.empty() && cmp_entry_key(t.entries_.back(), e) == 0) {
      t.entries_.back().coef += e.coef;
      if (t.entries_.back().coef.is_zero()) t.entries_.pop_back();
    } else {
      t.entries_.push_back(std::move(e));
    }
  }
  return t;
}

PolyTensor PolyTensor::of(const Poly& a, const Poly& b) {
  std::vector<Entry> es;
  for (const Term& ta : a.terms())
    for (const Term& tb : b.terms()) es.push_back({ta.mono, tb.mono, ta.coef * tb.coef});
  return from_entries(std::move(es));
}

PolyTensor PolyTensor::operator+(const PolyTensor& o) const {
  std::vector<Entry> es = entries_;
  es.insert(es.end(), o.entries_.begin(), o.entries_.end());
  return from_entries(std::move(es));
}

PolyTensor PolyTensor::operator-(const PolyTensor& o) const {
  std::vector<Entry> es = entries_;
  for (const Entry& e : o.entries_) es.push_back({e.left, e.right, -e.coef});
  return from_entries(std::move(es));
}

PolyTensor PolyTensor::operator*(const PolyTensor& o) const {
  std::vector<Entry> es;
  es.reserve(entries_.size() * o.entries_.size());
  for (const Entry& a : entries_)
    for (const Entry& b : o.entries_)
      es.push_back({a.left * b.left, a.right * b.right, a.coef * b.coef});
  return from_entries(std::move(es));
}

bool PolyTensor::operator==(const PolyTensor& o) const {
  if (entries_.size() != o.entries_.size()) return false;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (cmp_entry_key(entries_[i], o.entries_[i]) != 0) return false;
    if (entries_[i].coef != o.entries_[i].coef) return false;
  }
  return true;
}

std::vector<std::pair<Monomial, Poly>> PolyTensor::by_right() const {
  std::map<std::vector<Monomial::Factor>, std::vector<Term>> groups;
  for (const Entry& e : entries_) groups[e.right.factors()].push_back({e.left, e.coef});
  std::vector<std::pair<Monomial, Poly>> out;
  for (auto& [key, terms] : groups)
    out.push_back({Monomial::from_factors(key), Poly::from_terms(std::move(terms))});
  return out;
}

std::vector<std::pair<Monomial, Poly>> PolyTensor::by_left() const {
  std::map<std::vector<Monomial::Factor>, std::vector<Term>> groups;
  for (const Entry& e : entries_) groups[e.left.factors()].push_back({e.right, e.coef});
  std::vector<std::pair<Monomial, Poly>> out;
  for (auto& [key, terms] : groups)
    out.push_back({Monomial::from_factors(key), Poly::from_terms(std::move(terms))});
  return out;
}

PolyTensor coproduct_h_mono(const Monomial& m, int n) {
  PolyTensor acc = PolyTensor::of(Poly::constant(Rational(1)), Poly::constant(Rational(1)));
  for (const auto& [id, e] : m.factors()) {
    const GenVar v = GenVar::from_id(id, n);
    std::vector<PolyTensor::Entry> var_cop;
    for (int k = 1; k <= n; ++k) {
      if (v.kind == 0)
        var_cop.push_back({Monomial::var(g_id(v.upper, k, n)),
                           Monomial::var(g_id(k, v.lower, n)), Rational(1)});
      else
        var_cop.push_back({Monomial::var(gbar_id(k, v.lower, n)),
                           Monomial::var(gbar_id(v.upper, k, n)), Rational(1)});
    }
    const PolyTensor dv = PolyTensor::from_entries(std::move(var_cop));
    for (int r = 0; r < e; ++r) acc = acc * dv;
  }
  return acc;
}

PolyTensor coproduct_h(const Poly& p, int n) {
  std::vector<PolyTensor::Entry> es;
  for (const Term& t : p.terms()) {
    PolyTensor dm = coproduct_h_mono(t.mono, n);
    for (const auto& e : dm.entries()) es.push_back({e.left, e.right, e.coef * t.coef});
  }
  return PolyTensor::from_entries(std::move(es));
}

Rational counit_h(const Poly& p, int n) {
  Rational total(0);
  for (const Term& t : p.terms()) {
    bool diagonal = true;
    for (const auto& [id, e] : t.mono.factors()) {
      (void)e;
      const GenVar v = GenVar::from_id(id, n);
      if (v.upper != v.lower) { diagonal = false; break; }
    }
    if (diagonal) total += t.coef;
  }
  return total;
}

Poly antipode_h(const Poly& p, int n) {
  const int shift = n * n;
  std::vector<Term> terms;
  for (const Term& t : p.terms()) {
    std::vector<Monomial::Factor> fs;
    for (const auto& [id, e] : t.mono.factors())
      fs.push_back({id < shift ? id + shift : id - shift, e});
    terms.push_back({Monomial::from_factors(std::move(fs)), t.coef});
  }
  return Poly::from_terms(std::move(terms));
}

OAut OAut::build(const LeibnizAlgebra& alg, const GroebnerOptions& opts) {
  OAut o;
  o.alg = alg;
  o.n = alg.n;
  o.gb = buchberger(aut_ideal_generators(alg), opts);
  return o;
}

std::vector<Poly> basis_change_generators(const BasisChange& bc, int n) {
  std::vector<Poly> images(static_cast<size_t>(2 * n * n));
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        std::vector<Term> terms;
        for (int l = 1; l <= n; ++l)
          for (int m = 1; m <= n; ++m) {
            const Rational c = bc.t(i - 1, l - 1) * bc.tinv(m - 1, j - 1);
            if (c.is_zero()) continue;
            const int id = kind == 0 ? g_id(l, m, n) : gbar_id(l, m, n);
            terms.push_back({Monomial::var(id), c});
          }
        const int target = kind == 0 ? g_id(i, j, n) : gbar_id(i, j, n);
        images[static_cast<size_t>(target)] = Poly::from_terms(std::move(terms));
      }
  return images;
}

Poly apply_substitution(const Poly& p, const std::vector<Poly>& images) {
  Poly out;
  for (const Term& t : p.terms()) {
    Poly prod = Poly::constant(t.coef);
    for (const auto& [id, e] : t.mono.factors()) {
      const Poly& img = images[static_cast<size_t>(id)];
      for (int r = 0; r < e; ++r) prod = prod * img;
    }
    out += prod;
  }
  return out;
}

bool tensor_reduces_to_zero(const PolyTensor& t, const GroebnerBasis& gb) {
  // pass 1: reduce left legs
  std::vector<PolyTensor::Entry> survivors;
  for (const auto& [right, leftpoly] : t.by_right()) {
    const Poly nf = normal_form(leftpoly, gb);
    for (const Term& lt : nf.terms()) survivors.push_back({lt.mono, right, lt.coef});
  }
  // pass 2: right legs of the remainder must vanish
  const PolyTensor rest = PolyTensor::from_entries(std::move(survivors));
  for (const auto& [left, rightpoly] : rest.by_left()) {
    (void)left;
    if (!normal_form(rightpoly, gb).is_zero()) return false;
  }
  return true;
}

}  // namespace ydforge
