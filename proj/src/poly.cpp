#include "ydforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ydforge {

std::string GenVar::str() const {
  std::ostringstream os;
  os << (kind == 0 ? "G" : "Gbar") << "[" << upper << "," << lower << "]";
  return os.str();
}

Monomial Monomial::var(int id, int exp) {
  Monomial m;
  if (exp < 0) throw std::invalid_argument("Monomial: negative exponent");
  if (exp > 0) m.factors_.push_back({id, exp});
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [id, e] : factors) {
    if (e == 0) continue;
    if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (!m.factors_.empty() && m.factors_.back().first == id)
      m.factors_.back().second += e;
    else
      m.factors_.push_back({id, e});
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [id, e] : factors_) d += e;
  return d;
}

int Monomial::exponent(int id) const {
  for (const auto& [v, e] : factors_)
    if (v == id) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    if (factors_[i].first < o.factors_[j].first)
      out.factors_.push_back(factors_[i++]);
    else if (factors_[i].first > o.factors_[j].first)
      out.factors_.push_back(o.factors_[j++]);
    else {
      out.factors_.push_back({factors_[i].first, factors_[i].second + o.factors_[j].second});
      ++i, ++j;
    }
  }
  for (; i < factors_.size(); ++i) out.factors_.push_back(factors_[i]);
  for (; j < o.factors_.size(); ++j) out.factors_.push_back(o.factors_[j]);
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  size_t j = 0;
  for (const auto& [id, e] : factors_) {
    while (j < o.factors_.size() && o.factors_[j].first < id) ++j;
    if (j == o.factors_.size() || o.factors_[j].first != id || o.factors_[j].second < e)
      return false;
  }
  return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
  Monomial out;
  size_t j = 0;
  for (const auto& [id, e] : factors_) {
    int sub = 0;
    while (j < o.factors_.size() && o.factors_[j].first < id) ++j;
    if (j < o.factors_.size() && o.factors_[j].first == id) sub = o.factors_[j].second;
    if (e < sub) throw std::invalid_argument("Monomial: not divisible");
    if (e > sub) out.factors_.push_back({id, e - sub});
  }
  return out;
}

bool Monomial::coprime(const Monomial& o) const {
  size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    if (factors_[i].first < o.factors_[j].first) ++i;
    else if (factors_[i].first > o.factors_[j].first) ++j;
    else return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    if (a.factors_[i].first < b.factors_[j].first)
      out.factors_.push_back(a.factors_[i++]);
    else if (a.factors_[i].first > b.factors_[j].first)
      out.factors_.push_back(b.factors_[j++]);
    else {
      out.factors_.push_back({a.factors_[i].first,
                              std::max(a.factors_[i].second, b.factors_[j].second)});
      ++i, ++j;
    }
  }
  for (; i < a.factors_.size(); ++i) out.factors_.push_back(a.factors_[i]);
  for (; j < b.factors_.size(); ++j) out.factors_.push_back(b.factors_[j]);
  return out;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // rightmost variable where exponents differ; the side with the
  // smaller exponent there is the larger monomial
  auto ia = a.factors_.rbegin();
  auto ib = b.factors_.rbegin();
  while (ia != a.factors_.rend() && ib != b.factors_.rend()) {
    if (ia->first != ib->first) {
      // the one holding the higher-id variable has a positive exponent there
      return ia->first > ib->first ? -1 : 1;
    }
    if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
    ++ia, ++ib;
  }
  // unreachable at equal degree unless the monomials coincide
  if (ia != a.factors_.rend()) return -1;
  if (ib != b.factors_.rend()) return 1;
  return 0;
}

Poly Poly::constant(Rational c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(), std::move(c)});
  return p;
}

Poly Poly::variable(int id, int exp) { return term(Monomial::var(id, exp), Rational(1)); }

Poly Poly::term(Monomial m, Rational c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return Monomial::cmp(a.mono, b.mono) > 0;
  });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coef += t.coef;
    else
      p.terms_.push_back(std::move(t));
    if (!p.terms_.empty() && p.terms_.back().coef.is_zero()) p.terms_.pop_back();
  }
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = Monomial::cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0)
      out.terms_.push_back(terms_[i++]);
    else if (c < 0)
      out.terms_.push_back(o.terms_[j++]);
    else {
      Rational s = terms_[i].coef + o.terms_[j].coef;
      if (!s.is_zero()) out.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) acc.push_back({a.mono * b.mono, a.coef * b.coef});
  return from_terms(std::move(acc));
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly();
  Poly out = *this;
  for (auto& t : out.terms_) t.coef *= c;
  return out;
}

Poly Poly::mono_multiplied(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return Poly();
  Poly out;
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mono * m, t.coef * c});
  return out;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().coef.inverse());
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

std::string monomial_str(const Monomial& m, int n) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, e] : m.factors()) {
    if (!first) os << "*";
    os << GenVar::from_id(id, n).str();
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

std::string Poly::str(int n) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c.sign() < 0) { os << "-"; c = -c; }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (t.mono.is_one())
      os << c.str();
    else if (c.is_one())
      os << monomial_str(t.mono, n);
    else
      os << c.str() << "*" << monomial_str(t.mono, n);
    first = false;
  }
  return os.str();
}

namespace {

struct PolyLexer {
  const std::string& s;
  size_t pos = 0;
  explicit PolyLexer(const std::string& text) : s(text) {}

  void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
  bool eof() { skip_ws(); return pos >= s.size(); }
  char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stol(s.substr(start, pos - start));
  }
};

}  // namespace

Poly parse_poly(const std::string& text, int n) {
  PolyLexer lx(text);
  std::vector<Term> terms;
  bool first = true;
  while (!lx.eof()) {
    Rational sign(1);
    if (lx.consume('+')) {
    } else if (lx.consume('-')) {
      sign = Rational(-1);
    } else if (!first) {
      lx.fail("expected '+' or '-' between terms");
    }
    first = false;

    Rational coef = sign;
    std::vector<Monomial::Factor> factors;
    bool expect_factor = true;
    while (expect_factor) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        long num = lx.integer();
        if (lx.consume('/')) {
          long den = lx.integer();
          coef *= Rational(num, den);
        } else {
          coef *= Rational(num);
        }
      } else if (c == 'G') {
        ++lx.pos;
        int kind = 0;
        if (lx.s.compare(lx.pos, 3, "bar") == 0) { kind = 1; lx.pos += 3; }
        if (!lx.consume('[')) lx.fail("expected '[' after generator symbol");
        long i = lx.integer();
        if (!lx.consume(',')) lx.fail("expected ',' in generator index");
        long j = lx.integer();
        if (!lx.consume(']')) lx.fail("expected ']' in generator index");
        if (i < 1 || i > n || j < 1 || j > n) lx.fail("generator index out of range");
        int exp = 1;
        if (lx.consume('^')) exp = static_cast<int>(lx.integer());
        factors.push_back({GenVar{kind, static_cast<int>(i), static_cast<int>(j)}.id(n), exp});
      } else {
        lx.fail("expected coefficient or generator");
      }
      expect_factor = lx.consume('*');
    }
    terms.push_back({Monomial::from_factors(std::move(factors)), std::move(coef)});
  }
  if (terms.empty()) throw std::invalid_argument("parse error: empty polynomial");
  return Poly::from_terms(std::move(terms));
}

}  // namespace ydforge
