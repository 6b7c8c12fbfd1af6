#include "outer/rational.hpp"

#include "outer/error.hpp"

namespace outer {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error("malformed rational: '" + s + "'");
  if (q.get_den() == 0) throw Error("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace outer
