#include "ncprob/rational.hpp"

namespace ncprob {

Rational parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Coeff& c) {
  if (c.is_real()) return c.re().get_str();
  std::string s = c.re().get_str();
  if (c.im() > 0) s += "+";
  s += c.im().get_str();
  s += "i";
  return s;
}

}  // namespace ncprob
