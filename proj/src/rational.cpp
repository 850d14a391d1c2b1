#include "ydforge/rational.hpp"

#include <ostream>

namespace ydforge {

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  // strip surrounding whitespace
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("Rational: empty string");
  s = s.substr(first, last - first + 1);

  const auto slash = s.find('/');
  mpz_class num, den;
  auto parse_int = [](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("Rational: empty integer part");
    mpz_class z;
    if (z.set_str(part, 10) != 0)
      throw std::invalid_argument("Rational: bad integer '" + part + "'");
    return z;
  };
  if (slash == std::string::npos) {
    num = parse_int(s);
    den = 1;
  } else {
    num = parse_int(s.substr(0, slash));
    den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace ydforge
