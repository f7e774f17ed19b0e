#include "slicestab/slices.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "slicestab/errors.hpp"

namespace slicestab {

namespace {

// Sets of partial sums reachable from slot i+1 onward; reach[l] = {0}.
std::vector<std::set<Coweight>> suffix_sums(const SliceSpec& spec) {
  const int l = spec.length();
  std::vector<std::set<Coweight>> reach(l + 1);
  reach[l].insert(Coweight(spec.cartan().rank(), 0));
  for (int i = l - 1; i >= 0; --i)
    for (const auto& d : spec.orbit(i + 1))
      for (const auto& s : reach[i + 1]) reach[i].insert(d + s);
  return reach;
}

}  // namespace

SliceSpec::SliceSpec(CartanPtr cartan, std::vector<int> lambda_seq, Coweight mu, bool allow_zero_slots)
    : cartan_(std::move(cartan)), lambda_(std::move(lambda_seq)), mu_(std::move(mu)) {
  const int r = cartan_->rank();
  if (lambda_.empty()) throw InvalidSpec("lambda sequence is empty");
  if (static_cast<int>(mu_.size()) != r)
    throw InvalidSpec("mu must have " + std::to_string(r) + " coordinates");
  for (int idx : lambda_) {
    if (idx == 0 && allow_zero_slots) continue;
    if (idx < 1 || idx > r) throw InvalidSpec("coweight index out of range: " + std::to_string(idx));
    if (!cartan_->is_minuscule(idx))
      throw NonMinusculeUnsupported("omega_" + std::to_string(idx) + " is not minuscule in type " + cartan_->name());
  }
  RatVec x = cartan_->in_coroot_basis(to_rational(lambda_total() - mu_));
  for (const auto& c : x)
    if (c < 0 || c.get_den() != 1)
      throw InvalidSpec("lambda - mu is not a nonnegative integer combination of simple coroots");
  for (int idx : lambda_) orbits_.push_back(cartan_->weyl_orbit(cartan_->fundamental_coweight(idx)));
  if (!suffix_sums(*this)[0].count(mu_)) throw InvalidSpec("slice has no torus-fixed points");
}

Coweight SliceSpec::lambda_total() const {
  Coweight s(cartan_->rank(), 0);
  for (int idx : lambda_) s = s + cartan_->fundamental_coweight(idx);
  return s;
}

FixedPoint::FixedPoint(std::vector<Coweight> delta) : delta_(std::move(delta)) {
  const size_t r = delta_.empty() ? 0 : delta_[0].size();
  sigma_.assign(1, Coweight(r, 0));
  for (const auto& d : delta_) sigma_.push_back(sigma_.back() + d);
}

Polynomial weight_polynomial(const TorusWeight& w, int nvars) {
  if (static_cast<int>(w.root.size()) + 1 != nvars) throw std::invalid_argument("weight rank mismatch");
  return Polynomial::linear(to_rational(w.root), w.n);
}

int total_multiplicity(const WeightMultiset& ws) {
  int t = 0;
  for (const auto& [w, m] : ws) t += m;
  return t;
}

std::vector<FixedPoint> enumerate_fixed_points(const SliceSpec& spec) {
  const auto reach = suffix_sums(spec);
  const int l = spec.length();
  std::vector<FixedPoint> out;
  std::vector<Coweight> delta;
  std::function<void(int, const Coweight&)> walk = [&](int i, const Coweight& sigma) {
    if (i == l) {
      out.emplace_back(delta);
      return;
    }
    for (const auto& d : spec.orbit(i + 1)) {
      Coweight next = sigma + d;
      if (!reach[i + 1].count(spec.mu() - next)) continue;
      delta.push_back(d);
      walk(i + 1, next);
      delta.pop_back();
    }
  };
  walk(0, Coweight(spec.cartan().rank(), 0));
  return out;
}

int dimension(const SliceSpec& spec) {
  const auto& cd = spec.cartan();
  return pairing(spec.lambda_total() - cd.dominant_representative(spec.mu()), cd.two_rho());
}

// A segment h0 -> h1 crosses the level c = m + 1/2 for m between them. It
// contributes root + m*h when it moves toward the origin: downward above 0,
// upward below 0.
WeightMultiset tangent_weights(const SliceSpec& spec, const FixedPoint& p) {
  WeightMultiset ws;
  const int l = p.length();
  for (const auto& root : spec.cartan().roots()) {
    for (int i = 1; i <= l; ++i) {
      const int h0 = pairing(p.sigma(i - 1), root);
      const int h1 = pairing(p.sigma(i), root);
      for (int m = std::min(h0, h1); m < std::max(h0, h1); ++m) {
        const bool above = m >= 0;
        const bool decreasing = h1 < h0;
        if (above == decreasing) ++ws[TorusWeight{root, m}];
      }
    }
  }
  return ws;
}

Polynomial euler_class(const WeightMultiset& ws, int nvars) {
  Polynomial e = Polynomial::constant(nvars, 1);
  for (const auto& [w, m] : ws) e = e * weight_polynomial(w, nvars).pow(m);
  return e;
}

Polynomial euler_class_a(const WeightMultiset& ws, int nvars) {
  Polynomial e = Polynomial::constant(nvars, 1);
  for (const auto& [w, m] : ws) e = e * weight_polynomial(TorusWeight{w.root, 0}, nvars).pow(m);
  return e;
}

LinearFactors euler_factors(const WeightMultiset& ws, int nvars) {
  LinearFactors f(nvars);
  for (const auto& [w, m] : ws) f.multiply(weight_polynomial(w, nvars), m);
  return f;
}

LinearFactors euler_factors_a(const WeightMultiset& ws, int nvars) {
  LinearFactors f(nvars);
  for (const auto& [w, m] : ws) f.multiply(weight_polynomial(TorusWeight{w.root, 0}, nvars), m);
  return f;
}

std::pair<WeightMultiset, WeightMultiset> split_attract_repel(const WeightMultiset& ws, const Chamber& ch) {
  WeightMultiset attract, repel;
  for (const auto& [w, m] : ws) (ch.sign_of(w.root) > 0 ? attract : repel)[w] = m;
  return {attract, repel};
}

int flip_sign(const WeightMultiset& ws, const Chamber& ch1, const Chamber& ch2) {
  int flips = 0;
  for (const auto& [w, m] : ws)
    if (ch1.sign_of(w.root) < 0 && ch2.sign_of(w.root) > 0) flips += m;
  return flips % 2 ? -1 : 1;
}

int flip_sign(const SliceSpec& spec, const FixedPoint& p, const Chamber& ch1, const Chamber& ch2) {
  return flip_sign(tangent_weights(spec, p), ch1, ch2);
}

std::optional<Root> same_wall_component(const SliceSpec& spec, const FixedPoint& p, const FixedPoint& q) {
  if (p == q) throw std::invalid_argument("same_wall_component needs distinct points");
  const auto& cd = spec.cartan();
  std::optional<Root> found;
  for (const auto& root : cd.dominant_positive_roots()) {
    const Coweight& c = cd.coroot_of(root);
    const int k = static_cast<int>(std::find_if(c.begin(), c.end(), [](int x) { return x != 0; }) - c.begin());
    bool ok = true;
    for (int i = 1; i < p.length() && ok; ++i) {
      const Coweight d = p.sigma(i) - q.sigma(i);
      if (d[k] % c[k] != 0 || d != (d[k] / c[k]) * c) ok = false;
    }
    if (!ok) continue;
    if (found) throw ComputationError("two distinct root lines contain the sigma differences");
    found = root;
  }
  return found;
}

std::pair<SliceSpec, FixedPoint> project_to_wall_slice(const SliceSpec& spec, const FixedPoint& p, const Root& root) {
  if (!spec.cartan().is_root(root)) throw std::invalid_argument("project_to_wall_slice: not a root");
  std::vector<int> lambda;
  std::vector<Coweight> delta;
  for (int i = 1; i <= p.length(); ++i) {
    const int k = pairing(p.delta(i), root);
    if (std::abs(k) > 1) throw ComputationError("increment pairs to " + std::to_string(k) + " with a root");
    lambda.push_back(std::abs(k));
    delta.push_back(Coweight{k});
  }
  SliceSpec a1(CartanDatum::make('A', 1), lambda, Coweight{pairing(spec.mu(), root)}, true);
  return {std::move(a1), FixedPoint(std::move(delta))};
}

FixedPoint adjacent_transposition(const FixedPoint& p, int i) {
  if (i < 1 || i >= p.length()) throw std::out_of_range("transposition index out of range");
  auto d = p.deltas();
  std::swap(d[i - 1], d[i]);
  return FixedPoint(std::move(d));
}

FixedLocus::FixedLocus(SliceSpec spec) : spec_(std::move(spec)), points_(enumerate_fixed_points(spec_)) {
  dim_ = slicestab::dimension(spec_);
  for (size_t k = 0; k < points_.size(); ++k) {
    index_.emplace(points_[k], static_cast<int>(k));
    tangent_.push_back(tangent_weights(spec_, points_[k]));
  }
}

int FixedLocus::index_of(const FixedPoint& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

WeightMultiset FixedLocus::repelling(int idx, const Chamber& ch) const {
  return split_attract_repel(tangent(idx), ch).second;
}

Polarization repelling_polarization(const FixedLocus& locus, const Chamber& ch) {
  return Polarization{ch, std::vector<int>(locus.size(), 1)};
}

int polarization_sign(const FixedLocus& locus, const Polarization& pol, int idx, const Chamber& ch) {
  return pol.signs.at(idx) * flip_sign(locus.tangent(idx), pol.reference, ch);
}

Polynomial polarization_value(const FixedLocus& locus, const Polarization& pol, int idx) {
  Polynomial e = euler_class_a(locus.repelling(idx, pol.reference), locus.nvars());
  return e * Rational(pol.signs.at(idx));
}

Polarization dual_polarization(const FixedLocus& locus, const Polarization& pol) {
  Polarization dual{pol.reference.opposite(), {}};
  const int half = locus.dimension() / 2;
  for (int x = 0; x < locus.size(); ++x) {
    Polynomial eps = polarization_value(locus, pol, x) * Rational(half % 2 ? -1 : 1);
    Polynomial base = euler_class_a(locus.repelling(x, dual.reference), locus.nvars());
    Polynomial ratio = exact_div(eps, base);
    if (!ratio.is_constant() || abs(ratio.constant_term()) != 1)
      throw ComputationError("dual polarization is not a sign multiple of the repelling class");
    dual.signs.push_back(sign(ratio.constant_term()));
  }
  return dual;
}

LocalizationPairing::LocalizationPairing(const FixedLocus& locus) : common_(locus.nvars()) {
  std::vector<LinearFactors> euler;
  for (int x = 0; x < locus.size(); ++x) {
    euler.push_back(locus.euler_factors_at(x));
    common_ = common_.lcm(euler.back());
  }
  for (const auto& e : euler) cofactors_.push_back(common_.cofactor(e));
}

Polynomial LocalizationPairing::numerator(const std::vector<Polynomial>& v1, const std::vector<Polynomial>& v2) const {
  Polynomial total(common_.nvars());
  for (size_t x = 0; x < cofactors_.size(); ++x) {
    if (v1.at(x).is_zero() || v2.at(x).is_zero()) continue;
    total += v1[x] * v2[x] * cofactors_[x];
  }
  return total;
}

RationalFunction LocalizationPairing::pair(const std::vector<Polynomial>& v1, const std::vector<Polynomial>& v2) const {
  return RationalFunction(numerator(v1, v2), common_);
}

}  // namespace slicestab
