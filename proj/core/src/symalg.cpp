#include "slicestab/symalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "slicestab/errors.hpp"

namespace slicestab {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Polynomial p(nvars);
  Exponent e(nvars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::linear(const RatVec& a_coeffs, const Rational& h_coeff) {
  const int nvars = static_cast<int>(a_coeffs.size()) + 1;
  Polynomial p(nvars);
  for (int j = 0; j + 1 < nvars; ++j) {
    Exponent e(nvars, 0);
    e[j] = 1;
    p.add_term(e, a_coeffs[j]);
  }
  Exponent e(nvars, 0);
  e[nvars - 1] = 1;
  p.add_term(e, h_coeff);
  return p;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials over different variable sets");
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent(nvars_, 0));
}

Rational Polynomial::constant_term() const { return coefficient(Exponent(nvars_, 0)); }

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::deg_a() const {
  int best = kMinusInfinity;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int j = 0; j + 1 < nvars_; ++j) d += e[j];
    best = std::max(best, d);
  }
  return best;
}

int Polynomial::deg_h() const {
  int best = kMinusInfinity;
  for (const auto& [e, c] : terms_) best = std::max(best, e[nvars_ - 1]);
  return best;
}

int Polynomial::total_degree() const {
  int best = kMinusInfinity;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

Polynomial Polynomial::h_coefficient(int k) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[nvars_ - 1] != k) continue;
    Exponent f(e);
    f[nvars_ - 1] = 0;
    out.add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::truncate_mod_h2() const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_)
    if (e[nvars_ - 1] < 2) out.terms_.emplace(e, c);
  return out;
}

Rational Polynomial::evaluate(const RatVec& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluate: wrong point length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int j = 0; j < nvars_; ++j)
      for (int k = 0; k < e[j]; ++k) t *= point[j];
    total += t;
  }
  return total;
}

Polynomial Polynomial::substitute_a(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars_ - 1) throw std::invalid_argument("substitute_a: wrong image count");
  if (images.empty()) throw std::invalid_argument("substitute_a: no variables");
  const int target = images[0].nvars();
  Polynomial out(target);
  const Polynomial hh = h(target);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(target, c);
    for (int j = 0; j + 1 < nvars_; ++j)
      if (e[j]) t = t * images[j].pow(e[j]);
    if (e[nvars_ - 1]) t = t * hh.pow(e[nvars_ - 1]);
    out += t;
  }
  return out;
}

RatVec Polynomial::linear_coefficients() const {
  RatVec out(nvars_, 0);
  for (const auto& [e, c] : terms_) {
    int d = 0;
    int at = -1;
    for (int j = 0; j < nvars_; ++j) {
      d += e[j];
      if (e[j]) at = j;
    }
    if (d != 1) throw std::invalid_argument("not a homogeneous linear form: " + to_string());
    out[at] = c;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_);
  Polynomial::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int j = 0; j < a.nvars_; ++j) e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string Polynomial::monomial_key(const Exponent& e) {
  std::string out;
  const int n = static_cast<int>(e.size());
  for (int j = 0; j < n; ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += (j + 1 == n) ? std::string("h") : "a" + std::to_string(j + 1);
    if (e[j] != 1) out += "^" + std::to_string(e[j]);
  }
  return out.empty() ? "1" : out;
}

Polynomial::Exponent Polynomial::parse_monomial_key(const std::string& key, int nvars) {
  Exponent e(nvars, 0);
  if (key == "1") return e;
  std::stringstream ss(key);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    auto caret = factor.find('^');
    std::string name = factor.substr(0, caret);
    int power = 1;
    if (caret != std::string::npos) {
      const std::string digits = factor.substr(caret + 1);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw ValidationError("bad exponent in monomial: " + key);
      power = std::stoi(digits);
    }
    int index;
    if (name == "h") {
      index = nvars - 1;
    } else if (name.size() > 1 && name[0] == 'a' &&
               std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
      index = std::stoi(name.substr(1)) - 1;
      if (index < 0 || index >= nvars - 1) throw ValidationError("variable out of range: " + key);
    } else {
      throw ValidationError("bad monomial: " + key);
    }
    e[index] += power;
  }
  return e;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    Rational mag = abs(c);
    std::string mono = monomial_key(e);
    std::string body;
    if (mono == "1") {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
    first = false;
  }
  return out;
}

int deg_a(const Polynomial& p) { return p.deg_a(); }
Polynomial truncate_mod_h2(const Polynomial& p) { return p.truncate_mod_h2(); }
Rational evaluate(const Polynomial& p, const RatVec& point) { return p.evaluate(point); }

// Division by leading terms in lex order: if q divides p, every remainder is
// a multiple of q, so its leading term is divisible by that of q.
std::optional<Polynomial> try_exact_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.nvars() != q.nvars()) throw std::invalid_argument("polynomials over different variable sets");
  const int n = p.nvars();
  Polynomial rem = p;
  Polynomial quot(n);
  const auto& [lq_e, lq_c] = *q.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& [lr_e, lr_c] = *rem.terms().rbegin();
    Polynomial::Exponent e(n);
    for (int j = 0; j < n; ++j) {
      e[j] = lr_e[j] - lq_e[j];
      if (e[j] < 0) return std::nullopt;
    }
    const Polynomial mono = Polynomial::monomial(e, lr_c / lq_c);
    quot += mono;
    rem -= mono * q;
  }
  return quot;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
  auto s = try_exact_div(p, q);
  if (!s) throw NonDivisible("(" + p.to_string() + ") is not divisible by (" + q.to_string() + ")");
  return *s;
}

namespace {

Polynomial form_polynomial(const RatVec& form) {
  RatVec a(form.begin(), form.end() - 1);
  return Polynomial::linear(a, form.back());
}

}  // namespace

LinearFactors LinearFactors::of(const Polynomial& linear, int exponent) {
  LinearFactors f(linear.nvars());
  f.multiply(linear, exponent);
  return f;
}

int LinearFactors::degree() const {
  int d = 0;
  for (const auto& [form, e] : factors_) d += e;
  return d;
}

Polynomial LinearFactors::to_polynomial() const {
  Polynomial out = Polynomial::constant(nvars_, scalar_);
  for (const auto& [form, e] : factors_) {
    RatVec a(form.begin(), form.end() - 1);
    out = out * Polynomial::linear(a, form.back()).pow(e);
  }
  return out;
}

void LinearFactors::multiply(const Polynomial& linear, int exponent) {
  if (linear.nvars() != nvars_) throw std::invalid_argument("linear factor over a different variable set");
  if (exponent < 0) throw std::invalid_argument("negative exponent in linear factor");
  if (exponent == 0) return;
  if (linear.is_zero()) throw std::invalid_argument("zero linear factor");
  RatVec form = linear.linear_coefficients();
  auto lead = std::find_if(form.begin(), form.end(), [](const Rational& c) { return c != 0; });
  Rational c = *lead;
  for (auto& x : form) x /= c;
  for (int k = 0; k < exponent; ++k) scalar_ *= c;
  factors_[form] += exponent;
}

void LinearFactors::multiply(const LinearFactors& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("linear factors over different variable sets");
  scalar_ *= o.scalar_;
  for (const auto& [form, e] : o.factors_) factors_[form] += e;
}


LinearFactors LinearFactors::lcm(const LinearFactors& o) const {
  LinearFactors out(nvars_);
  out.factors_ = factors_;
  for (const auto& [form, e] : o.factors_) out.factors_[form] = std::max(out.factors_[form], e);
  return out;
}

Polynomial LinearFactors::cofactor(const LinearFactors& divisor) const {
  Polynomial out = Polynomial::constant(nvars_, scalar_ / divisor.scalar_);
  for (const auto& [form, e] : divisor.factors_) {
    auto it = factors_.find(form);
    if (it == factors_.end() || it->second < e) throw NonDivisible("linear factor product does not divide");
  }
  for (const auto& [form, e] : factors_) {
    auto it = divisor.factors_.find(form);
    const int rest = e - (it == divisor.factors_.end() ? 0 : it->second);
    if (rest > 0) out = out * form_polynomial(form).pow(rest);
  }
  return out;
}

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(num_.nvars()) {}

RationalFunction::RationalFunction(Polynomial num, const LinearFactors& den) : num_(std::move(num)), den_(den.nvars()) {
  *this /= den;
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = LinearFactors(num_.nvars());
    return;
  }
  for (auto it = den_.factors_.begin(); it != den_.factors_.end();) {
    const Polynomial f = form_polynomial(it->first);
    while (it->second > 0) {
      auto q = try_exact_div(num_, f);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.factors_.erase(it) : std::next(it);
  }
}

Polynomial RationalFunction::to_polynomial() const {
  if (!is_polynomial()) throw ExactDivisionFailure("not a polynomial: " + to_string());
  return num_;
}

Rational RationalFunction::evaluate(const RatVec& point) const {
  Rational d = den_.to_polynomial().evaluate(point);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.evaluate(point) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  LinearFactors common(nvars());
  for (const auto& [form, e] : den_.factors_) common.factors_[form] = e;
  for (const auto& [form, e] : o.den_.factors_) common.factors_[form] = std::max(common.factors_[form], e);
  auto lift = [&](const RationalFunction& r) {
    Polynomial p = r.num_;
    for (const auto& [form, e] : common.factors_) {
      auto it = r.den_.factors_.find(form);
      int have = it == r.den_.factors_.end() ? 0 : it->second;
      if (e > have) p = p * form_polynomial(form).pow(e - have);
    }
    return p;
  };
  num_ = lift(*this) + lift(o);
  den_ = std::move(common);
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_.multiply(o.den_);
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const LinearFactors& d) {
  if (d.nvars() != nvars()) throw std::invalid_argument("division over a different variable set");
  num_ *= Rational(1) / d.scalar();
  for (const auto& [form, e] : d.factors()) den_.factors_[form] += e;
  reduce();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out(*this);
  out.num_ = -out.num_;
  return out;
}

bool RationalFunction::operator==(const RationalFunction& o) const { return (*this - o).is_zero(); }

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string den;
  for (const auto& [form, e] : den_.factors_) {
    if (!den.empty()) den += "*";
    den += "(" + form_polynomial(form).to_string() + ")";
    if (e != 1) den += "^" + std::to_string(e);
  }
  return "(" + num_.to_string() + ")/" + den;
}

}  // namespace slicestab
