#include <doctest.h>

#include "helpers.hpp"
#include "slicestab/errors.hpp"

using namespace slicestab;
using namespace testing_support;

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Counts crossings of half-integer levels in a single direction, then applies
// the boundary correction between 0 and <mu, root>: for a level c > 0 the
// multiplicity is the number of upward crossings, less one when c lies
// strictly between 0 and <mu, root>; symmetrically for c < 0 with downward
// crossings.
WeightMultiset crossing_oracle(const SliceSpec& spec, const FixedPoint& p) {
  WeightMultiset ws;
  for (const auto& root : spec.cartan().roots()) {
    std::vector<int> heights;
    for (int i = 0; i <= p.length(); ++i) heights.push_back(pairing(p.sigma(i), root));
    const int m = heights.back();
    int lo = 0, hi = 0;
    for (int x : heights) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    for (int twice_c = 2 * lo + 1; twice_c < 2 * hi; twice_c += 2) {
      int up = 0, down = 0;
      for (size_t i = 0; i + 1 < heights.size(); ++i) {
        if (2 * heights[i] < twice_c && twice_c < 2 * heights[i + 1]) ++up;
        if (2 * heights[i + 1] < twice_c && twice_c < 2 * heights[i]) ++down;
      }
      int mult;
      if (twice_c > 0) mult = up - (twice_c < 2 * m ? 1 : 0);
      else mult = down - (twice_c > 2 * m ? 1 : 0);
      // The level is n + 1/2 for the weight root + n h.
      if (mult > 0) ws[TorusWeight{root, (twice_c - 1) / 2}] += mult;
    }
  }
  return ws;
}

RatVec scaled(const RatVec& v, int s) {
  RatVec out = v;
  for (auto& x : out) x *= s;
  return out;
}

// Random minuscule slice with a fixed point built from a random path.
std::optional<SliceSpec> random_spec(std::mt19937& rng, int max_dim) {
  static const std::vector<std::pair<char, int>> types{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'C', 2}, {'D', 4}};
  auto [t, n] = types[std::uniform_int_distribution<size_t>(0, types.size() - 1)(rng)];
  auto cd = CartanDatum::make(t, n);
  const auto& mins = cd->minuscule_indices();
  const int l = std::uniform_int_distribution<int>(1, 6)(rng);
  std::vector<int> lambda;
  Coweight mu(n, 0);
  for (int i = 0; i < l; ++i) {
    const int idx = mins[std::uniform_int_distribution<size_t>(0, mins.size() - 1)(rng)];
    lambda.push_back(idx);
    const auto orbit = cd->weyl_orbit(cd->fundamental_coweight(idx));
    mu = mu + orbit[std::uniform_int_distribution<size_t>(0, orbit.size() - 1)(rng)];
  }
  SliceSpec spec(cd, lambda, mu);
  if (dimension(spec) > max_dim) return std::nullopt;
  return spec;
}

}  // namespace

TEST_CASE("fixed point enumeration examples") {
  auto a1 = CartanDatum::make('A', 1);
  const auto pts = enumerate_fixed_points(SliceSpec(a1, {1, 1}, {0}));
  CHECK(pts == std::vector<FixedPoint>{a1_point({-1, 1}), a1_point({1, -1})});
  CHECK(enumerate_fixed_points(SliceSpec(a1, std::vector<int>(5, 1), {3})).size() == 5);
  CHECK(enumerate_fixed_points(SliceSpec(CartanDatum::make('A', 2), {1, 1, 1}, {0, 0})).size() == 6);
}

TEST_CASE("fixed point counts of PSL2 slices are binomial") {
  for (auto [l, k] : a1_range(10)) {
    CAPTURE(l);
    CAPTURE(k);
    const auto pts = enumerate_fixed_points(SliceSpec(CartanDatum::make('A', 1), std::vector<int>(l, 1), {k}));
    CHECK(static_cast<long>(pts.size()) == binomial(l, (l + k) / 2));
    CHECK(std::is_sorted(pts.begin(), pts.end()));
  }
}

TEST_CASE("fixed points satisfy their defining conditions") {
  auto cd = CartanDatum::make('D', 4);
  SliceSpec spec(cd, {1, 3, 4}, {0, 0, 0, 0});
  for (const auto& p : enumerate_fixed_points(spec)) {
    CHECK(p.sigma(p.length()) == spec.mu());
    for (int i = 1; i <= p.length(); ++i) {
      const auto& orbit = spec.orbit(i);
      CHECK(std::binary_search(orbit.begin(), orbit.end(), p.delta(i)));
    }
  }
}

TEST_CASE("slice validation") {
  auto a2 = CartanDatum::make('A', 2);
  CHECK_THROWS_AS(SliceSpec(CartanDatum::make('B', 2), {2}, {0, 0}), NonMinusculeUnsupported);
  CHECK_THROWS_AS(SliceSpec(CartanDatum::make('G', 2), {1}, {0, 0}), NonMinusculeUnsupported);
  CHECK_THROWS_AS(SliceSpec(a2, {1}, {0, 0}), InvalidSpec);        // lambda - mu not in the coroot lattice
  CHECK_THROWS_AS(SliceSpec(a2, {1, 2}, {2, 2}), InvalidSpec);     // mu above lambda
  CHECK_THROWS_AS(SliceSpec(a2, {1, 3}, {0, 0}), InvalidSpec);     // bad index
  CHECK_THROWS_AS(SliceSpec(a2, {}, {0, 0}), InvalidSpec);
  CHECK_THROWS_AS(SliceSpec(a2, {1, 2}, {0}), InvalidSpec);
  CHECK_NOTHROW(SliceSpec(a2, {1, 2}, {0, 0}));
}

TEST_CASE("dimension examples") {
  auto a1 = CartanDatum::make('A', 1);
  CHECK(dimension(SliceSpec(a1, std::vector<int>(5, 1), {3})) == 2);
  CHECK(dimension(SliceSpec(CartanDatum::make('A', 2), {1, 1, 1}, {0, 0})) == 6);
  CHECK(dimension(SliceSpec(CartanDatum::make('A', 3), {2}, {0, 1, 0})) == 0);
  // A non-dominant mu has the dimension of its dominant conjugate.
  CHECK(dimension(SliceSpec(a1, {1, 1, 1}, {-1})) == 2);
}

TEST_CASE("tangent weights of the A4 surface") {
  auto a1 = CartanDatum::make('A', 1);
  SliceSpec spec(a1, std::vector<int>(5, 1), {3});
  CHECK(tangent_weights(spec, a1_point({-1, 1, 1, 1, 1})) ==
        WeightMultiset{{TorusWeight{{1}, -1}, 1}, {TorusWeight{{-1}, 0}, 1}});
  // p_2: alpha + h and -(alpha + 2h).
  CHECK(tangent_weights(spec, a1_point({1, 1, -1, 1, 1})) ==
        WeightMultiset{{TorusWeight{{1}, 1}, 1}, {TorusWeight{{-1}, -2}, 1}});
  CHECK(tangent_weights(SliceSpec(CartanDatum::make('A', 2), {1}, {1, 0}), FixedPoint({{1, 0}})).empty());
}

TEST_CASE("tangent weights agree with the crossing oracle and have the right size") {
  std::mt19937 rng(2024);
  int tested = 0;
  while (tested < 200) {
    auto spec = random_spec(rng, 12);
    if (!spec) continue;
    ++tested;
    const int dim = dimension(*spec);
    for (const auto& p : enumerate_fixed_points(*spec)) {
      const auto ws = tangent_weights(*spec, p);
      CHECK(total_multiplicity(ws) == dim);
      CHECK(ws == crossing_oracle(*spec, p));
      for (const auto& [w, m] : ws) {
        auto it = ws.find(TorusWeight{-w.root, -w.n - 1});
        CHECK((it != ws.end() && it->second == m));
      }
    }
  }
}

TEST_CASE("Euler classes") {
  WeightMultiset ws{{TorusWeight{{1}, -1}, 1}, {TorusWeight{{-1}, 0}, 1}};
  CHECK(euler_class(ws, 2) == a() * a() * -1 + a() * h());
  CHECK(euler_class({}, 2) == c(1));
  CHECK(euler_class({{TorusWeight{{-1}, -1}, 2}}, 2) == (a() + h()).pow(2));
  CHECK(euler_class_a(ws, 2) == a() * a() * -1);
  CHECK(euler_factors(ws, 2).to_polynomial() == euler_class(ws, 2));
  CHECK_THROWS_AS(weight_polynomial(TorusWeight{{1, 0}, 0}, 2), std::invalid_argument);
}

TEST_CASE("attracting and repelling parts") {
  auto a1 = CartanDatum::make('A', 1);
  WeightMultiset ws{{TorusWeight{{1}, -1}, 1}, {TorusWeight{{-1}, 0}, 1}};
  auto [att, rep] = split_attract_repel(ws, Chamber::dominant(a1));
  CHECK(att == WeightMultiset{{TorusWeight{{1}, -1}, 1}});
  CHECK(rep == WeightMultiset{{TorusWeight{{-1}, 0}, 1}});
  auto [att2, rep2] = split_attract_repel(ws, Chamber::antidominant(a1));
  CHECK(att2 == rep);
  CHECK(rep2 == att);
  auto [e1_, e2_] = split_attract_repel({}, Chamber::dominant(a1));
  CHECK(e1_.empty());
  CHECK(e2_.empty());

  FixedLocus locus(SliceSpec(CartanDatum::make('A', 2), {1, 1, 1}, {0, 0}));
  for (int x = 0; x < locus.size(); ++x)
    CHECK(2 * total_multiplicity(locus.repelling(x, Chamber::dominant(locus.spec().cartan_ptr()))) == 6);
}

TEST_CASE("flip signs") {
  auto a1 = CartanDatum::make('A', 1);
  SliceSpec spec(a1, std::vector<int>(5, 1), {3});
  const FixedPoint p0 = a1_point({-1, 1, 1, 1, 1});
  const Chamber plus = Chamber::dominant(a1), minus = Chamber::antidominant(a1);
  CHECK(flip_sign(spec, p0, plus, plus) == 1);
  CHECK(flip_sign(spec, p0, plus, minus) == -1);

  auto a2 = CartanDatum::make('A', 2);
  FixedLocus locus(SliceSpec(a2, {1, 2, 1, 2}, {0, 0}));
  const std::vector<Chamber> chambers{Chamber(a2, {1, 1}), Chamber(a2, {-1, 2}), Chamber(a2, {2, -3}),
                                      Chamber(a2, {-1, -1})};
  for (int x = 0; x < locus.size(); ++x) {
    const auto& ws = locus.tangent(x);
    for (const auto& c1 : chambers)
      for (const auto& c2 : chambers) {
        // Independent of the witness representatives.
        CHECK(flip_sign(ws, c1, c2) == flip_sign(ws, Chamber(a2, scaled(c1.witness(), 3)), Chamber(a2, scaled(c2.witness(), 5))));
        for (const auto& c3 : chambers) CHECK(flip_sign(ws, c1, c2) * flip_sign(ws, c2, c3) == flip_sign(ws, c1, c3));
      }
  }
}

TEST_CASE("wall components") {
  auto a2 = CartanDatum::make('A', 2);
  SliceSpec spec(a2, {1, 1, 1}, {0, 0});
  const FixedPoint p({e1(), e2(), e3()});
  CHECK(same_wall_component(spec, p, FixedPoint({e2(), e1(), e3()})) == Root{1, 0});
  CHECK(!same_wall_component(spec, p, FixedPoint({e3(), e1(), e2()})).has_value());
  auto a1 = CartanDatum::make('A', 1);
  SliceSpec s1(a1, std::vector<int>(4, 1), {0});
  CHECK(same_wall_component(s1, a1_point({1, 1, -1, -1}), a1_point({-1, 1, -1, 1})) == Root{1});
}

TEST_CASE("projection to the rank-one wall slice") {
  auto a2 = CartanDatum::make('A', 2);
  SliceSpec spec(a2, {1, 1, 1}, {0, 0});
  auto [slice, image] = project_to_wall_slice(spec, FixedPoint({e1(), e2(), e3()}), Root{1, 0});
  CHECK(slice.lambda_seq() == std::vector<int>{1, 1, 0});
  CHECK(slice.mu() == Coweight{0});
  CHECK(image == a1_point({1, -1, 0}));
  SliceSpec s2(a2, {1, 2}, {1, 1});
  CHECK(project_to_wall_slice(s2, FixedPoint({e1(), {0, 1}}), Root{1, 1}).first.mu() == Coweight{2});

  auto a1 = CartanDatum::make('A', 1);
  SliceSpec s1(a1, {1, 1, 1}, {1});
  auto [same, pt] = project_to_wall_slice(s1, a1_point({1, -1, 1}), Root{1});
  CHECK(same.lambda_seq() == s1.lambda_seq());
  CHECK(same.mu() == s1.mu());
  CHECK(pt == a1_point({1, -1, 1}));
}

TEST_CASE("adjacent transpositions") {
  CHECK(adjacent_transposition(a1_point({-1, 1}), 1) == a1_point({1, -1}));
  CHECK(adjacent_transposition(a1_point({1, 1, -1}), 1) == a1_point({1, 1, -1}));
  const FixedPoint p = a1_point({1, -1, -1, 1});
  for (int i = 1; i < 4; ++i) CHECK(adjacent_transposition(adjacent_transposition(p, i), i) == p);
  CHECK_THROWS_AS(adjacent_transposition(p, 4), std::out_of_range);
  CHECK_THROWS_AS(adjacent_transposition(p, 0), std::out_of_range);
}

TEST_CASE("localization pairing") {
  FixedLocus locus = a1_locus(2, 0);
  LocalizationPairing pairing(locus);
  const std::vector<Polynomial> ones{c(1), c(1)};
  // 1/(-a(a-h)) + 1/(-a(a+h)) = -2/(a^2 - h^2)
  CHECK(pairing.pair(ones, ones) == RationalFunction(c(-2)) / LinearFactors::of(a() - h()) / LinearFactors::of(a() + h()));
  CHECK(pairing.pair(ones, {Polynomial(2), Polynomial(2)}).is_zero());
}

TEST_CASE("polarizations") {
  FixedLocus locus = a1_locus(3, 1);
  auto a1 = locus.spec().cartan_ptr();
  const Chamber plus = Chamber::dominant(a1);
  Polarization pol = repelling_polarization(locus, plus);
  for (int x = 0; x < locus.size(); ++x) {
    CHECK(polarization_sign(locus, pol, x, plus) == 1);
    CHECK(polarization_sign(locus, pol, x, plus.opposite()) == flip_sign(locus.tangent(x), plus, plus.opposite()));
  }
  const Polarization dual = dual_polarization(locus, pol);
  CHECK(dual.reference == plus.opposite());
  for (int x = 0; x < locus.size(); ++x)
    CHECK(polarization_value(locus, dual, x) == polarization_value(locus, pol, x) * Rational(-1));
}
