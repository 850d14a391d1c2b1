#include "ydforge/pbw.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ydforge {

int pbw_cmp(const PBWMonomial& a, const PBWMonomial& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a < b) return 1;  // lex-smaller sequence is the larger term for display
  if (b < a) return -1;
  return 0;
}

PBWElement PBWElement::term(PBWMonomial m, Rational c) {
  PBWElement e;
  if (!c.is_zero()) e.terms_.push_back({std::move(m), std::move(c)});
  return e;
}

PBWElement PBWElement::from_terms(std::vector<PBWTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const PBWTerm& a, const PBWTerm& b) { return pbw_cmp(a.mono, b.mono) > 0; });
  PBWElement e;
  for (auto& t : terms) {
    if (!e.terms_.empty() && e.terms_.back().mono == t.mono)
      e.terms_.back().coef += t.coef;
    else
      e.terms_.push_back(std::move(t));
    if (!e.terms_.empty() && e.terms_.back().coef.is_zero()) e.terms_.pop_back();
  }
  return e;
}

int PBWElement::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.size()));
  return d;
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
  std::vector<PBWTerm> ts = terms_;
  ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(std::move(ts));
}

PBWElement PBWElement::operator-() const {
  PBWElement e = *this;
  for (auto& t : e.terms_) t.coef = -t.coef;
  return e;
}

PBWElement PBWElement::operator-(const PBWElement& o) const { return *this + (-o); }

PBWElement PBWElement::scaled(const Rational& c) const {
  if (c.is_zero()) return PBWElement();
  PBWElement e = *this;
  for (auto& t : e.terms_) t.coef *= c;
  return e;
}

bool PBWElement::operator==(const PBWElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

std::string PBWElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c.sign() < 0) { os << "-"; c = -c; }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (t.mono.empty()) {
      os << c.str();
    } else {
      if (!c.is_one()) os << c.str() << "*";
      // sorted factors with exponent collection
      size_t i = 0;
      bool firstf = true;
      while (i < t.mono.size()) {
        size_t j = i;
        while (j < t.mono.size() && t.mono[j] == t.mono[i]) ++j;
        if (!firstf) os << "*";
        os << "x" << t.mono[i] + 1;
        if (j - i > 1) os << "^" << j - i;
        firstf = false;
        i = j;
      }
    }
    first = false;
  }
  return os.str();
}

PBWElement pbw_linear(const RatVec& coords) {
  std::vector<PBWTerm> ts;
  for (int a = 0; a < coords.size(); ++a)
    if (!coords(a).is_zero()) ts.push_back({{a}, coords(a)});
  return PBWElement::from_terms(std::move(ts));
}

PBWElement pbw_of_h_basis(const LieQuotient& lq, int i) { return pbw_linear(lq.q.col(i)); }

namespace {

// x_m' * x_k for a sorted monomial prefix, recursive single insertion
PBWElement insert_gen(const LieQuotient& lq, const PBWMonomial& m, int k) {
  if (k < 0 || k >= lq.m) throw std::invalid_argument("pbw: generator index out of range");
  if (m.empty() || m.back() <= k) {
    PBWMonomial out = m;
    out.push_back(k);
    return PBWElement::term(std::move(out), Rational(1));
  }
  const int l = m.back();
  PBWMonomial head(m.begin(), m.end() - 1);
  // x_head (x_l x_k) = x_head (x_k x_l) + x_head [x_l, x_k]
  PBWElement acc;
  const PBWElement head_k = insert_gen(lq, head, k);
  for (const auto& t : head_k.terms()) {
    const PBWElement shifted = insert_gen(lq, t.mono, l);
    acc += shifted.scaled(t.coef);
  }
  for (int p = 0; p < lq.m; ++p) {
    const Rational& c = lq.c_lie[static_cast<size_t>(p)](l, k);
    if (c.is_zero()) continue;
    acc += insert_gen(lq, head, p).scaled(c);
  }
  return acc;
}

PBWElement mul_element_gen(const LieQuotient& lq, const PBWElement& e, int k) {
  PBWElement acc;
  for (const auto& t : e.terms()) acc += insert_gen(lq, t.mono, k).scaled(t.coef);
  return acc;
}

}  // namespace

PBWElement pbw_mul_mono(const LieQuotient& lq, const PBWMonomial& a, const PBWMonomial& b) {
  PBWElement acc = PBWElement::term(a, Rational(1));
  for (int k : b) acc = mul_element_gen(lq, acc, k);
  return acc;
}

PBWElement pbw_mul(const LieQuotient& lq, const PBWElement& a, const PBWElement& b) {
  std::vector<PBWTerm> ts;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      const PBWElement prod = pbw_mul_mono(lq, ta.mono, tb.mono);
      for (const auto& t : prod.terms()) ts.push_back({t.mono, t.coef * ta.coef * tb.coef});
    }
  return PBWElement::from_terms(std::move(ts));
}

TensorElement TensorElement::from_entries(std::vector<Entry> entries) {
  auto key_cmp = [](const Entry& a, const Entry& b) {
    const int cl = pbw_cmp(a.left, b.left);
    if (cl != 0) return cl > 0;
    return pbw_cmp(a.right, b.right) > 0;
  };
  std::sort(entries.begin(), entries.end(), key_cmp);
  TensorElement t;
  for (auto& e : entries) {
    if (e.coef.is_zero()) continue;
    if (!t.entries_.empty() && t.entries_.back().left == e.left &&
        t.entries_.back().right == e.right) {
      t.entries_.back().coef += e.coef;
      if (t.entries_.back().coef.is_zero()) t.entries_.pop_back();
    } else {
      t.entries_.push_back(std::move(e));
    }
  }
  return t;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  std::vector<Entry> es = entries_;
  es.insert(es.end(), o.entries_.begin(), o.entries_.end());
  return from_entries(std::move(es));
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  std::vector<Entry> es = entries_;
  for (const Entry& e : o.entries_) es.push_back({e.left, e.right, -e.coef});
  return from_entries(std::move(es));
}

bool TensorElement::operator==(const TensorElement& o) const {
  if (entries_.size() != o.entries_.size()) return false;
  for (size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].left != o.entries_[i].left || entries_[i].right != o.entries_[i].right ||
        entries_[i].coef != o.entries_[i].coef)
      return false;
  return true;
}

TensorElement TensorElement::mul(const LieQuotient& lq, const TensorElement& o) const {
  std::vector<Entry> es;
  for (const Entry& a : entries_)
    for (const Entry& b : o.entries_) {
      const PBWElement l = pbw_mul_mono(lq, a.left, b.left);
      const PBWElement r = pbw_mul_mono(lq, a.right, b.right);
      for (const auto& tl : l.terms())
        for (const auto& tr : r.terms())
          es.push_back({tl.mono, tr.mono, a.coef * b.coef * tl.coef * tr.coef});
    }
  return from_entries(std::move(es));
}

namespace {

// splits of a multiset of generators with binomial multiplicities
void enumerate_splits(const std::vector<std::pair<int, int>>& exps, size_t pos,
                      PBWMonomial& left, PBWMonomial& right, long multiplicity,
                      std::vector<TensorElement::Entry>& out) {
  if (pos == exps.size()) {
    out.push_back({left, right, Rational(multiplicity)});
    return;
  }
  const auto [gen, e] = exps[pos];
  // choose how many copies go left
  long binom = 1;
  for (int takeLeft = 0; takeLeft <= e; ++takeLeft) {
    const size_t lsz = left.size(), rsz = right.size();
    for (int r = 0; r < takeLeft; ++r) left.push_back(gen);
    for (int r = takeLeft; r < e; ++r) right.push_back(gen);
    enumerate_splits(exps, pos + 1, left, right, multiplicity * binom, out);
    left.resize(lsz);
    right.resize(rsz);
    binom = binom * (e - takeLeft) / (takeLeft + 1);
  }
}

}  // namespace

TensorElement coproduct_u(const PBWElement& u) {
  std::vector<TensorElement::Entry> es;
  for (const auto& t : u.terms()) {
    std::vector<std::pair<int, int>> exps;
    size_t i = 0;
    while (i < t.mono.size()) {
      size_t j = i;
      while (j < t.mono.size() && t.mono[j] == t.mono[i]) ++j;
      exps.push_back({t.mono[i], static_cast<int>(j - i)});
      i = j;
    }
    PBWMonomial left, right;
    std::vector<TensorElement::Entry> splits;
    enumerate_splits(exps, 0, left, right, 1, splits);
    for (auto& e : splits) es.push_back({std::move(e.left), std::move(e.right), e.coef * t.coef});
  }
  return TensorElement::from_entries(std::move(es));
}

Rational counit_u(const PBWElement& u) {
  for (const auto& t : u.terms())
    if (t.mono.empty()) return t.coef;
  return Rational(0);
}

PBWElement antipode_u(const LieQuotient& lq, const PBWElement& u) {
  PBWElement acc;
  for (const auto& t : u.terms()) {
    PBWElement prod = PBWElement::unit();
    for (auto it = t.mono.rbegin(); it != t.mono.rend(); ++it)
      prod = pbw_mul(lq, prod, PBWElement::generator(*it).scaled(Rational(-1)));
    acc += prod.scaled(t.coef);
  }
  return acc;
}

bool relator_wellformed(const LeibnizAlgebra& alg, const LieQuotient& lq) {
  const int n = alg.n;
  for (const RatVec& v : lq.kernel_basis) {
    if (!pbw_linear(lq.q * v).is_zero()) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatVec ei = RatVec::Constant(n, Rational(0)), ej = RatVec::Constant(n, Rational(0));
      ei(i) = Rational(1);
      ej(j) = Rational(1);
      const PBWElement bracket_img = pbw_linear(lq.q * alg.bracket(ei, ej));
      const PBWElement xi = pbw_of_h_basis(lq, i), xj = pbw_of_h_basis(lq, j);
      const PBWElement commutator = pbw_mul(lq, xi, xj) - pbw_mul(lq, xj, xi);
      if (bracket_img - commutator != PBWElement::zero()) return false;
    }
  return true;
}

std::vector<PBWMonomial> pbw_monomials_up_to(int m, int degcap) {
  std::vector<PBWMonomial> out;
  out.push_back({});
  size_t level_start = 0;
  for (int d = 1; d <= degcap; ++d) {
    const size_t level_end = out.size();
    for (size_t i = level_start; i < level_end; ++i) {
      const int lo = out[i].empty() ? 0 : out[i].back();
      for (int g = lo; g < m; ++g) {
        PBWMonomial next = out[i];
        next.push_back(g);
        out.push_back(std::move(next));
      }
    }
    level_start = level_end;
  }
  std::sort(out.begin(), out.end(), [](const PBWMonomial& a, const PBWMonomial& b) {
    return pbw_cmp(a, b) < 0;
  });
  return out;
}

std::vector<UWord> parse_u_words(const std::string& text, int m) {
  size_t pos = 0;
  const std::string& s = text;
  auto skip = [&] { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; };
  auto integer = [&]() -> long {
    skip();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("pbw parse: expected integer at " + std::to_string(pos));
    return std::stol(s.substr(start, pos - start));
  };
  std::vector<UWord> words;
  bool first = true;
  skip();
  while (pos < s.size()) {
    Rational coef(1);
    skip();
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') coef = Rational(-1);
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("pbw parse: expected '+' or '-' at " + std::to_string(pos));
    }
    first = false;
    std::vector<int> letters;
    bool expect_factor = true;
    while (expect_factor) {
      skip();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        long num = integer();
        skip();
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          coef *= Rational(num, integer());
        } else {
          coef *= Rational(num);
        }
      } else if (pos < s.size() && s[pos] == 'x') {
        ++pos;
        long idx = integer();
        if (idx < 1 || idx > m) throw std::invalid_argument("pbw parse: generator index out of range");
        int exp = 1;
        skip();
        if (pos < s.size() && s[pos] == '^') { ++pos; exp = static_cast<int>(integer()); }
        for (int r = 0; r < exp; ++r) letters.push_back(static_cast<int>(idx) - 1);
      } else {
        throw std::invalid_argument("pbw parse: expected factor at " + std::to_string(pos));
      }
      skip();
      expect_factor = pos < s.size() && s[pos] == '*';
      if (expect_factor) ++pos;
    }
    words.push_back({std::move(letters), std::move(coef)});
    skip();
  }
  if (words.empty()) throw std::invalid_argument("pbw parse: empty expression");
  return words;
}

PBWElement pbw_from_words(const LieQuotient& lq, const std::vector<UWord>& words) {
  PBWElement acc;
  for (const UWord& w : words) {
    PBWElement prod = PBWElement::unit();
    for (int g : w.letters) prod = pbw_mul(lq, prod, PBWElement::generator(g));
    acc += prod.scaled(w.coef);
  }
  return acc;
}

}  // namespace ydforge
