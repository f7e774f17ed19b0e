#pragma once

#include <random>
#include <vector>

#include "slicestab/slices.hpp"

namespace testing_support {

using namespace slicestab;

// Variables of the rank-one ring Q[a, h].
inline Polynomial a() { return Polynomial::variable(2, 0); }
inline Polynomial h() { return Polynomial::h(2); }
inline Polynomial c(const Rational& x) { return Polynomial::constant(2, x); }
inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline FixedPoint a1_point(std::initializer_list<int> signs) {
  std::vector<Coweight> d;
  for (int s : signs) d.push_back(Coweight{s});
  return FixedPoint(d);
}

inline FixedLocus a1_locus(int l, int k) {
  return FixedLocus(SliceSpec(CartanDatum::make('A', 1), std::vector<int>(l, 1), Coweight{k}));
}

// All PSL2 slices (omega^l, k omega) with |k| < l and l + k even.
inline std::vector<std::pair<int, int>> a1_range(int max_l) {
  std::vector<std::pair<int, int>> out;
  for (int l = 1; l <= max_l; ++l)
    for (int k = -l + 1; k < l; ++k)
      if ((l + k) % 2 == 0) out.emplace_back(l, k);
  return out;
}

// PSL3 coweights e1, e2, e3 (weights of the defining representation) in the
// fundamental coweight basis.
inline Coweight e1() { return {1, 0}; }
inline Coweight e2() { return {-1, 1}; }
inline Coweight e3() { return {0, -1}; }

inline Polynomial random_polynomial(std::mt19937& rng, int nvars, int max_terms = 4, int max_deg = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms), deg(0, max_deg), coef(-5, 5), den(1, 3);
  Polynomial p(nvars);
  const int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    Polynomial::Exponent e(nvars);
    for (auto& x : e) x = deg(rng);
    p += Polynomial::monomial(e, q(coef(rng), den(rng)));
  }
  return p;
}

}  // namespace testing_support
