#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slicestab/rational.hpp"

namespace slicestab {

// Sparse polynomial over Q in variables a_1..a_r and h. Exponent vectors
// have length nvars = r + 1 with the h-degree last. Zero coefficients are
// never stored, so structural equality is mathematical equality.
class Polynomial {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Rational>;
  static constexpr int kMinusInfinity = INT_MIN;

  explicit Polynomial(int nvars = 1) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial monomial(const Exponent& e, const Rational& c);
  // Variable index nvars-1 is h.
  static Polynomial variable(int nvars, int index);
  static Polynomial h(int nvars) { return variable(nvars, nvars - 1); }
  // sum_j a_coeffs[j] a_{j+1} + h_coeff h
  static Polynomial linear(const RatVec& a_coeffs, const Rational& h_coeff);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponent& e) const;

  // Max total degree in a_1..a_r; kMinusInfinity for the zero polynomial.
  int deg_a() const;
  int deg_h() const;
  int total_degree() const;
  // Coefficient of h^k as a polynomial (h-free).
  Polynomial h_coefficient(int k) const;
  Polynomial truncate_mod_h2() const;
  Rational evaluate(const RatVec& point) const;
  // Substitutes each a_j by a linear form in new variables (h kept as h).
  Polynomial substitute_a(const std::vector<Polynomial>& images) const;
  // Linear polynomial coefficients (a_1..a_r, h); throws if not homogeneous linear.
  RatVec linear_coefficients() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Human-readable form, e.g. "-a1^2 + 1/2*a1*h".
  std::string to_string() const;
  // Monomial key used by the JSON format: "a1^2*h", "1" for the empty product.
  static std::string monomial_key(const Exponent& e);
  static Exponent parse_monomial_key(const std::string& key, int nvars);

 private:
  void add_term(const Exponent& e, const Rational& c);
  void check_compatible(const Polynomial& o) const;

  int nvars_;
  Terms terms_;
};

int deg_a(const Polynomial& p);
// Returns s with s*q == p; throws NonDivisible otherwise.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);
std::optional<Polynomial> try_exact_div(const Polynomial& p, const Polynomial& q);
Polynomial truncate_mod_h2(const Polynomial& p);
Rational evaluate(const Polynomial& p, const RatVec& point);

// Product of nonzero homogeneous linear forms with integer exponents. Each
// form is normalized so that its first nonzero coefficient is 1; the scalar
// absorbs the normalization.
class LinearFactors {
 public:
  explicit LinearFactors(int nvars = 1) : nvars_(nvars) {}
  static LinearFactors of(const Polynomial& linear, int exponent = 1);

  int nvars() const { return nvars_; }
  const std::map<RatVec, int>& factors() const { return factors_; }
  const Rational& scalar() const { return scalar_; }
  int degree() const;
  Polynomial to_polynomial() const;
  void multiply(const Polynomial& linear, int exponent = 1);
  void multiply(const LinearFactors& o);
  // Least common multiple of the factor sets; scalar 1.
  LinearFactors lcm(const LinearFactors& o) const;
  // this / divisor as a polynomial; throws NonDivisible if some factor of
  // the divisor has a higher exponent here.
  Polynomial cofactor(const LinearFactors& divisor) const;
  LinearFactors& operator*=(const LinearFactors& o) {
    multiply(o);
    return *this;
  }

 private:
  friend class RationalFunction;
  int nvars_;
  Rational scalar_ = 1;
  std::map<RatVec, int> factors_;
};

// num / den with den a product of linear forms. Only linear factors are ever
// cancelled; equality is decided by cross-multiplication.
class RationalFunction {
 public:
  explicit RationalFunction(int nvars = 1) : num_(nvars), den_(nvars) {}
  RationalFunction(Polynomial num);  // NOLINT: implicit polynomial embedding
  RationalFunction(Polynomial num, const LinearFactors& den);

  int nvars() const { return num_.nvars(); }
  const Polynomial& num() const { return num_; }
  const LinearFactors& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.factors_.empty(); }
  // Throws ExactDivisionFailure if a linear factor survives cancellation.
  Polynomial to_polynomial() const;
  Rational evaluate(const RatVec& point) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const LinearFactors& d);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const LinearFactors& d) { return a /= d; }
  RationalFunction operator-() const;

  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void reduce();

  Polynomial num_;
  LinearFactors den_;
};

}  // namespace slicestab
