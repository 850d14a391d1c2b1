#include "ydforge/leibniz.hpp"

#include <sstream>
#include <stdexcept>

namespace ydforge {

std::string to_string(Chirality c) { return c == Chirality::left ? "left" : "right"; }

LeibnizAlgebra LeibnizAlgebra::zero(int n, Chirality ch) {
  LeibnizAlgebra alg;
  alg.n = n;
  alg.chirality = ch;
  alg.c.assign(static_cast<size_t>(n), RatMat::Constant(n, n, Rational(0)));
  return alg;
}

RatVec LeibnizAlgebra::bracket(const RatVec& v, const RatVec& w) const {
  RatVec out = RatVec::Constant(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (v(i).is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (w(j).is_zero()) continue;
      const Rational f = v(i) * w(j);
      for (int k = 0; k < n; ++k) out(k) += f * c_at(k, i, j);
    }
  }
  return out;
}

Rational LeibnizAlgebra::right_ad_trace(int j) const {
  Rational t(0);
  for (int i = 0; i < n; ++i) t += c_at(i, i, j);
  return t;
}

std::string LeibnizViolation::describe() const {
  std::ostringstream os;
  os << "triple (p,i,j)=(" << p + 1 << "," << i + 1 << "," << j + 1
     << ") fails in component k=" << k + 1;
  return os.str();
}

std::optional<LeibnizViolation> find_leibniz_violation(const LeibnizAlgebra& alg) {
  const int n = alg.n;
  for (int p = 0; p < n; ++p)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Rational lhs(0), rhs(0);
          if (alg.chirality == Chirality::left) {
            // [x_p,[x_i,x_j]] = [[x_p,x_i],x_j] + [x_i,[x_p,x_j]]
            for (int s = 0; s < n; ++s) lhs += alg.c_at(k, p, s) * alg.c_at(s, i, j);
            for (int r = 0; r < n; ++r) rhs += alg.c_at(k, r, j) * alg.c_at(r, p, i);
            for (int m = 0; m < n; ++m) rhs += alg.c_at(k, i, m) * alg.c_at(m, p, j);
          } else {
            // [[x_i,x_j],x_p] = [[x_i,x_p],x_j] + [x_i,[x_j,x_p]]
            for (int s = 0; s < n; ++s) lhs += alg.c_at(k, s, p) * alg.c_at(s, i, j);
            for (int r = 0; r < n; ++r) rhs += alg.c_at(k, r, j) * alg.c_at(r, i, p);
            for (int m = 0; m < n; ++m) rhs += alg.c_at(k, i, m) * alg.c_at(m, j, p);
          }
          if (lhs != rhs) return LeibnizViolation{p, i, j, k};
        }
  return std::nullopt;
}

bool check_leibniz(const LeibnizAlgebra& alg) { return !find_leibniz_violation(alg).has_value(); }

bool is_lie(const LeibnizAlgebra& alg) {
  if (!check_leibniz(alg)) throw std::invalid_argument("is_lie: input is not a Leibniz algebra");
  for (int k = 0; k < alg.n; ++k)
    for (int i = 0; i < alg.n; ++i) {
      if (!alg.c_at(k, i, i).is_zero()) return false;
      for (int j = 0; j < alg.n; ++j)
        if (alg.c_at(k, i, j) != -alg.c_at(k, j, i)) return false;
    }
  return true;
}

LeibnizAlgebra LieQuotient::lie_algebra(Chirality ch) const {
  LeibnizAlgebra alg;
  alg.n = m;
  alg.chirality = ch;
  alg.c = c_lie;
  return alg;
}

LieQuotient lie_quotient(const LeibnizAlgebra& alg) {
  const int n = alg.n;
  RowSpan span(n);
  auto basis_vec = [&](int i) {
    RatVec e = RatVec::Constant(n, Rational(0));
    e(i) = Rational(1);
    return e;
  };

  // polarized squares seed the ideal
  std::vector<RatVec> frontier;
  for (int i = 0; i < n; ++i) {
    RatVec sq = RatVec::Constant(n, Rational(0));
    for (int k = 0; k < n; ++k) sq(k) = alg.c_at(k, i, i);
    if (span.insert(sq)) frontier.push_back(std::move(sq));
    for (int j = i + 1; j < n; ++j) {
      RatVec pol = RatVec::Constant(n, Rational(0));
      for (int k = 0; k < n; ++k) pol(k) = alg.c_at(k, i, j) + alg.c_at(k, j, i);
      if (span.insert(pol)) frontier.push_back(std::move(pol));
    }
  }

  // close under bracketing with basis vectors on both sides
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const RatVec& v : frontier) {
      for (int i = 0; i < n; ++i) {
        RatVec a = alg.bracket(basis_vec(i), v);
        if (span.insert(a)) next.push_back(std::move(a));
        RatVec b = alg.bracket(v, basis_vec(i));
        if (span.insert(b)) next.push_back(std::move(b));
      }
    }
    frontier = std::move(next);
  }

  LieQuotient lq;
  lq.kernel_basis.assign(span.rows().begin(), span.rows().end());
  const std::vector<int>& piv = span.pivots();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int p : piv) is_pivot[static_cast<size_t>(p)] = true;

  lq.m = n - span.rank();
  lq.q = RatMat::Constant(lq.m, n, Rational(0));
  lq.lift = RatMat::Constant(n, lq.m, Rational(0));
  std::vector<int> free_cols;
  for (int i = 0; i < n; ++i)
    if (!is_pivot[static_cast<size_t>(i)]) free_cols.push_back(i);
  for (int a = 0; a < lq.m; ++a) {
    lq.lift(free_cols[static_cast<size_t>(a)], a) = Rational(1);
    // row a of q: coefficient of the a-th free coordinate after reduction
    for (int i = 0; i < n; ++i) {
      RatVec r = span.reduce(basis_vec(i));
      lq.q(a, i) = r(free_cols[static_cast<size_t>(a)]);
    }
  }

  lq.c_lie.assign(static_cast<size_t>(lq.m), RatMat::Constant(lq.m, lq.m, Rational(0)));
  for (int a = 0; a < lq.m; ++a)
    for (int b = 0; b < lq.m; ++b) {
      const RatVec br = alg.bracket(lq.lift.col(a), lq.lift.col(b));
      const RatVec img = lq.q * br;
      for (int k = 0; k < lq.m; ++k) lq.c_lie[static_cast<size_t>(k)](a, b) = img(k);
    }
  return lq;
}

RatMat ad_matrix(const LeibnizAlgebra& alg, int k) {
  if (k < 0 || k >= alg.n) throw std::out_of_range("ad_matrix: index out of range");
  RatMat m(alg.n, alg.n);
  for (int i = 0; i < alg.n; ++i)
    for (int j = 0; j < alg.n; ++j)
      m(i, j) = alg.chirality == Chirality::left ? alg.c_at(i, k, j) : alg.c_at(i, j, k);
  return m;
}

BasisChange BasisChange::from(RatMat t) {
  auto inv = try_inverse(t);
  if (!inv) throw std::invalid_argument("BasisChange: singular matrix");
  return BasisChange{std::move(t), std::move(*inv)};
}

LeibnizAlgebra transform_basis(const LeibnizAlgebra& alg, const BasisChange& bc) {
  const int n = alg.n;
  LeibnizAlgebra out = LeibnizAlgebra::zero(n, alg.chirality);
  // C'^k_{ij} = sum_{p,q,s} Tinv^k_s C^s_{pq} T^p_i T^q_j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVec xi = bc.t.col(i), xj = bc.t.col(j);
      RatVec br = alg.bracket(xi, xj);
      RatVec coords = bc.tinv * br;
      for (int k = 0; k < n; ++k) out.c_at(k, i, j) = coords(k);
    }
  return out;
}

}  // namespace ydforge
