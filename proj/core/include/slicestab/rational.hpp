#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace slicestab {

using Rational = mpq_class;
using IntVec = std::vector<int>;
using RatVec = std::vector<Rational>;

// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
// Accepts "n", "n/d" and surrounding whitespace; throws ValidationError.
Rational parse_rational(const std::string& text);

RatVec to_rational(const IntVec& v);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace slicestab
