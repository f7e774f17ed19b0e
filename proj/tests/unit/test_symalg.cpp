#include <doctest.h>

#include "helpers.hpp"
#include "slicestab/errors.hpp"

using namespace slicestab;
using namespace testing_support;

TEST_CASE("deg_a ignores h") {
  const Polynomial a1 = Polynomial::variable(3, 0), a2 = Polynomial::variable(3, 1), hh = Polynomial::h(3);
  CHECK(deg_a(a1.pow(2) * hh.pow(3)) == 2);
  CHECK(deg_a(hh) == 0);
  CHECK(deg_a(a1 * a2 + hh * a1) == 2);
  CHECK(deg_a(Polynomial(3)) == Polynomial::kMinusInfinity);
}

TEST_CASE("exact division examples") {
  CHECK(exact_div(a() * a() - h() * h(), a() - h()) == a() + h());
  const Polynomial p = a() * a() * q(3, 2) - h();
  CHECK(exact_div(p, c(1)) == p);
  CHECK(exact_div(h() * a(), a()) == h());
  CHECK_THROWS_AS(exact_div(a() + h(), a()), NonDivisible);
  CHECK_THROWS(exact_div(a(), Polynomial(2)));
  CHECK(!try_exact_div(a() * a() + h(), a() - h()).has_value());
}

TEST_CASE("truncation mod h^2") {
  CHECK(truncate_mod_h2(a() + h() + h() * h()) == a() + h());
  CHECK(truncate_mod_h2(h() * h()).is_zero());
  CHECK(truncate_mod_h2((a() + h()) * (a() + h())) == a() * a() + a() * h() * 2);
}

TEST_CASE("evaluation") {
  CHECK(evaluate(a() + h(), {2, 3}) == 5);
  CHECK(evaluate(Polynomial(2), {7, 9}) == 0);
  CHECK(evaluate(a() * h(), {q(1, 2), q(1, 3)}) == q(1, 6));
}

TEST_CASE("string form") {
  const Polynomial p = a() * a() * -1 + a() * h() * q(1, 2);
  CHECK(p.to_string() == "-a1^2 + 1/2*a1*h");
  CHECK(Polynomial(2).to_string() == "0");
  CHECK((c(3) - h()).to_string() == "-h + 3");
}

TEST_CASE("ring laws and evaluation homomorphism on random triples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int nv = 2 + trial % 3;
    const Polynomial x = random_polynomial(rng, nv), y = random_polynomial(rng, nv), z = random_polynomial(rng, nv);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
    CHECK((x - x).is_zero());
    RatVec pt(nv);
    for (auto& v : pt) v = q(coord(rng), 1 + trial % 4);
    CHECK(evaluate(x * y, pt) == evaluate(x, pt) * evaluate(y, pt));
    CHECK(evaluate(x + z, pt) == evaluate(x, pt) + evaluate(z, pt));
    if (!y.is_zero()) CHECK(exact_div(x * y, y) == x);
  }
}

TEST_CASE("linear factor bookkeeping") {
  LinearFactors f(2);
  f.multiply(a() - h(), 2);
  f.multiply(h() * 2 - a() * 2);
  CHECK(f.degree() == 3);
  CHECK(f.to_polynomial() == (a() - h()).pow(3) * -2);
  LinearFactors g = LinearFactors::of(a());
  const LinearFactors l = f.lcm(g);
  CHECK(l.degree() == 4);
  CHECK(l.cofactor(g) == (a() - h()).pow(3));
  CHECK_THROWS_AS(g.cofactor(f), NonDivisible);
}

TEST_CASE("rational functions") {
  const RationalFunction x(h(), LinearFactors::of(a()));
  const RationalFunction y(a() + h(), LinearFactors::of(a()));
  CHECK((x + RationalFunction(c(1))) == y);
  // Cancellation of linear factors.
  CHECK(RationalFunction(a() * h(), LinearFactors::of(a())).is_polynomial());
  CHECK(RationalFunction(a() * h(), LinearFactors::of(a())).to_polynomial() == h());
  CHECK_THROWS_AS(x.to_polynomial(), ExactDivisionFailure);
  // Equality is an equivalence relation consistent with arithmetic.
  LinearFactors den = LinearFactors::of(a());
  den.multiply(a() - h());
  const RationalFunction x2(h() * (a() - h()), den);
  CHECK(x == x2);
  CHECK(x2 == x);
  const RationalFunction x3(h() * 3, LinearFactors::of(a() * 3));
  CHECK(x2 == x3);
  CHECK(x == x3);
  CHECK(x * y == x2 * y);
  CHECK(x - x2 == RationalFunction(2));
  CHECK(evaluate(a(), {q(1, 2), 1}) == q(1, 2));
  CHECK((x * y).evaluate({2, 3}) == q(3, 2) * q(5, 2));
}

TEST_CASE("random rational function arithmetic agrees with evaluation") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> n(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    auto lin = [&] {
      Polynomial p = a() * (1 + std::abs(n(rng))) + h() * n(rng);
      return p;
    };
    const Polynomial d1 = lin(), d2 = lin();
    const RationalFunction f(random_polynomial(rng, 2), LinearFactors::of(d1));
    const RationalFunction g(random_polynomial(rng, 2), LinearFactors::of(d2));
    const RatVec pt{q(7 + trial, 3), q(1, 5)};
    CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
    CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    CHECK((f - g) + g == f);
  }
}

TEST_CASE("monomial keys") {
  CHECK(Polynomial::monomial_key({2, 0, 1}) == "a1^2*h");
  CHECK(Polynomial::monomial_key({0, 0, 0}) == "1");
  CHECK(Polynomial::parse_monomial_key("a1^1*a2^3*h^1", 3) == Polynomial::Exponent{1, 3, 1});
  CHECK(Polynomial::parse_monomial_key("a2*h", 3) == Polynomial::Exponent{0, 1, 1});
  CHECK_THROWS_AS(Polynomial::parse_monomial_key("a3", 3), ValidationError);
  CHECK_THROWS_AS(Polynomial::parse_monomial_key("x^2", 3), ValidationError);
  CHECK_THROWS_AS(Polynomial::parse_monomial_key("a1^", 3), ValidationError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-3/6") == q(-1, 2));
  CHECK(to_string(q(4, 2)) == "2");
  CHECK(to_string(q(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
}
