#include "ydforge/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ydforge {

namespace {

// Full reduction against an arbitrary generator list (not necessarily a
// Groebner basis): every term of the remainder is irreducible.
Poly reduce_full(const Poly& p, const std::vector<Poly>& gens, int degree_cap) {
  std::vector<Term> remainder;
  Poly h = p;
  while (!h.is_zero()) {
    if (degree_cap > 0 && h.leading().mono.degree() > degree_cap)
      throw DegreeCapExceeded(degree_cap);
    bool reduced = false;
    for (const Poly& g : gens) {
      if (g.is_zero()) continue;
      if (g.leading().mono.divides(h.leading().mono)) {
        const Monomial quot = h.leading().mono.divide_by(g.leading().mono);
        const Rational coef = h.leading().coef / g.leading().coef;
        h = h - g.mono_multiplied(quot, coef);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(h.leading());
      h = h - Poly::term(h.leading().mono, h.leading().coef);
    }
  }
  return Poly::from_terms(std::move(remainder));
}

Poly s_poly(const Poly& f, const Poly& g) {
  const Monomial l = Monomial::lcm(f.leading().mono, g.leading().mono);
  const Poly a = f.mono_multiplied(l.divide_by(f.leading().mono), f.leading().coef.inverse());
  const Poly b = g.mono_multiplied(l.divide_by(g.leading().mono), g.leading().coef.inverse());
  return a - b;
}

struct Pair {
  size_t i, j;
  Monomial lcm;
  int degree;
};

}  // namespace

GroebnerBasis buchberger(std::vector<Poly> gens, const GroebnerOptions& opts) {
  std::vector<Poly> basis;
  for (Poly& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(g.monic());
  }
  if (basis.empty()) throw std::invalid_argument("buchberger: no nonzero generators");

  std::set<std::pair<size_t, size_t>> pending;
  std::deque<Pair> queue;
  auto push_pairs = [&](size_t jnew) {
    for (size_t i = 0; i < jnew; ++i) {
      Monomial l = Monomial::lcm(basis[i].leading().mono, basis[jnew].leading().mono);
      const int d = l.degree();
      queue.push_back(Pair{i, jnew, std::move(l), d});
      pending.insert({i, jnew});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    // normal strategy: smallest lcm degree first
    auto it = std::min_element(queue.begin(), queue.end(),
                               [](const Pair& a, const Pair& b) { return a.degree < b.degree; });
    Pair p = *it;
    queue.erase(it);
    pending.erase({p.i, p.j});

    const Poly& f = basis[p.i];
    const Poly& g = basis[p.j];
    // product criterion
    if (f.leading().mono.coprime(g.leading().mono)) continue;
    // chain criterion: some other lead divides the lcm and both pairs
    // with it are no longer pending
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading().mono.divides(p.lcm)) continue;
      const auto a = std::minmax(p.i, k);
      const auto b = std::minmax(p.j, k);
      if (!pending.count({a.first, a.second}) && !pending.count({b.first, b.second})) skip = true;
    }
    if (skip) continue;

    if (opts.degree_cap > 0 && p.degree > opts.degree_cap) throw DegreeCapExceeded(opts.degree_cap);
    Poly r = reduce_full(s_poly(f, g), basis, opts.degree_cap);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    push_pairs(basis.size() - 1);
  }

  // minimalize: drop generators whose lead is divisible by another lead
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[j].leading().mono.divides(basis[i].leading().mono)) {
        // keep exactly one copy when leads are equal
        redundant = basis[i].leading().mono != basis[j].leading().mono || j < i;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // inter-reduce tails
  std::vector<Poly> reduced = minimal;
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = reduce_full(reduced[i], others, opts.degree_cap).monic();
  }
  reduced.erase(std::remove_if(reduced.begin(), reduced.end(),
                               [](const Poly& q) { return q.is_zero(); }),
                reduced.end());
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return Monomial::cmp(a.leading().mono, b.leading().mono) < 0;
  });
  return GroebnerBasis(std::move(reduced));
}

Poly normal_form(const Poly& p, const GroebnerBasis& gb) {
  return reduce_full(p, gb.generators(), 0);
}

std::vector<Poly> aut_ideal_generators(const LeibnizAlgebra& alg) {
  const int n = alg.n;
  std::vector<Poly> out;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<Term> terms;
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            const Rational& c = alg.c_at(k, l, m);
            if (c.is_zero()) continue;
            terms.push_back({Monomial::var(g_id(l + 1, i + 1, n)) * Monomial::var(g_id(m + 1, j + 1, n)), c});
          }
        for (int r = 0; r < n; ++r) {
          const Rational& c = alg.c_at(r, i, j);
          if (c.is_zero()) continue;
          terms.push_back({Monomial::var(g_id(k + 1, r + 1, n)), -c});
        }
        Poly p = Poly::from_terms(std::move(terms));
        if (!p.is_zero()) out.push_back(std::move(p));
      }
  // inverse relations, both orders
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        std::vector<Term> terms;
        for (int k = 1; k <= n; ++k) {
          const int a = kind == 0 ? g_id(i, k, n) : gbar_id(i, k, n);
          const int b = kind == 0 ? gbar_id(k, j, n) : g_id(k, j, n);
          terms.push_back({Monomial::var(a) * Monomial::var(b), Rational(1)});
        }
        if (i == j) terms.push_back({Monomial::one(), Rational(-1)});
        out.push_back(Poly::from_terms(std::move(terms)));
      }
  return out;
}

Rational evaluate(const Poly& p, const RatMat& m, const RatMat& minv, int n) {
  if (m.rows() != n || m.cols() != n || minv.rows() != n || minv.cols() != n)
    throw std::invalid_argument("evaluate: matrix size mismatch");
  RatMat residual = m * minv - rat_identity(n);
  if (!is_zero(residual)) throw std::invalid_argument("evaluate: inconsistent inverse");
  Rational total(0);
  for (const Term& t : p.terms()) {
    Rational v = t.coef;
    for (const auto& [id, e] : t.mono.factors()) {
      const GenVar g = GenVar::from_id(id, n);
      const Rational& entry =
          g.kind == 0 ? m(g.upper - 1, g.lower - 1) : minv(g.upper - 1, g.lower - 1);
      for (int r = 0; r < e; ++r) v *= entry;
    }
    total += v;
  }
  return total;
}

bool is_automorphism(const LeibnizAlgebra& alg, const RatMat& m) {
  const int n = alg.n;
  if (m.rows() != n || m.cols() != n) return false;
  if (!try_inverse(m)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational lhs(0), rhs(0);
        for (int r = 0; r < n; ++r) lhs += alg.c_at(r, i, j) * m(k, r);
        for (int l = 0; l < n; ++l)
          for (int mm = 0; mm < n; ++mm) rhs += m(l, i) * m(mm, j) * alg.c_at(k, l, mm);
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace ydforge
