#include "slicestab/rational.hpp"

#include "slicestab/errors.hpp"

namespace slicestab {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) throw ValidationError("empty rational");
  std::string s = text.substr(first, last - first + 1);
  if (s[0] == '+') s = s.substr(1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ValidationError("malformed rational: " + text);
  if (q.get_den() == 0) throw ValidationError("zero denominator: " + text);
  q.canonicalize();
  return q;
}

RatVec to_rational(const IntVec& v) { return RatVec(v.begin(), v.end()); }

}  // namespace slicestab
