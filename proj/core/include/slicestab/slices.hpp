#pragma once

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "slicestab/cartan.hpp"
#include "slicestab/symalg.hpp"

namespace slicestab {

// Slice data: a sequence of minuscule fundamental coweights (1-based indices)
// and a target coweight mu.
class SliceSpec {
 public:
  // Throws NonMinusculeUnsupported or InvalidSpec. Index 0 (the zero
  // coweight) is accepted only when allow_zero_slots is set.
  SliceSpec(CartanPtr cartan, std::vector<int> lambda_seq, Coweight mu, bool allow_zero_slots = false);

  const CartanDatum& cartan() const { return *cartan_; }
  const CartanPtr& cartan_ptr() const { return cartan_; }
  const std::vector<int>& lambda_seq() const { return lambda_; }
  int length() const { return static_cast<int>(lambda_.size()); }
  const Coweight& mu() const { return mu_; }
  Coweight lambda_total() const;
  // W-orbit of lambda_i, sorted; slot is 1-based.
  const std::vector<Coweight>& orbit(int slot) const { return orbits_.at(slot - 1); }
  // Number of polynomial variables: rank weight coordinates plus h.
  int nvars() const { return cartan_->rank() + 1; }
  bool is_a1() const { return cartan_->type_letter() == 'A' && cartan_->rank() == 1; }

 private:
  CartanPtr cartan_;
  std::vector<int> lambda_;
  Coweight mu_;
  std::vector<std::vector<Coweight>> orbits_;
};

// Torus-fixed point as its increment sequence delta_1..delta_l; the partial
// sums sigma_0 = 0, ..., sigma_l = mu are derived.
class FixedPoint {
 public:
  FixedPoint() = default;
  explicit FixedPoint(std::vector<Coweight> delta);

  int length() const { return static_cast<int>(delta_.size()); }
  const std::vector<Coweight>& deltas() const { return delta_; }
  const Coweight& delta(int i) const { return delta_.at(i - 1); }  // 1 <= i <= l
  const Coweight& sigma(int i) const { return sigma_.at(i); }      // 0 <= i <= l

  auto operator<=>(const FixedPoint& o) const { return delta_ <=> o.delta_; }
  bool operator==(const FixedPoint& o) const { return delta_ == o.delta_; }

 private:
  std::vector<Coweight> delta_;
  std::vector<Coweight> sigma_;
};

// The T-weight root + n*h.
struct TorusWeight {
  Root root;
  int n = 0;
  auto operator<=>(const TorusWeight&) const = default;
};
using WeightMultiset = std::map<TorusWeight, int>;

Polynomial weight_polynomial(const TorusWeight& w, int nvars);
int total_multiplicity(const WeightMultiset& ws);

std::vector<FixedPoint> enumerate_fixed_points(const SliceSpec& spec);
// <lambda - mu^+, 2 rho^vee> with mu^+ the dominant conjugate of mu.
int dimension(const SliceSpec& spec);
WeightMultiset tangent_weights(const SliceSpec& spec, const FixedPoint& p);

Polynomial euler_class(const WeightMultiset& ws, int nvars);
// Product of the A-parts of the weights (h set to zero).
Polynomial euler_class_a(const WeightMultiset& ws, int nvars);
LinearFactors euler_factors(const WeightMultiset& ws, int nvars);
LinearFactors euler_factors_a(const WeightMultiset& ws, int nvars);

// (attracting, repelling); throws WitnessOnWall if a root pairs to zero.
std::pair<WeightMultiset, WeightMultiset> split_attract_repel(const WeightMultiset& ws, const Chamber& ch);
// e_A(N^{-ch2}) / e_A(N^{-ch1}) at p, a sign.
int flip_sign(const SliceSpec& spec, const FixedPoint& p, const Chamber& ch1, const Chamber& ch2);
int flip_sign(const WeightMultiset& ws, const Chamber& ch1, const Chamber& ch2);

// Root (dominant-positive representative) whose coroot multiples contain
// every sigma_p^i - sigma_q^i, if any.
std::optional<Root> same_wall_component(const SliceSpec& spec, const FixedPoint& p, const FixedPoint& q);
// Rank-one slice seen by the wall of the root, with zero slots kept.
std::pair<SliceSpec, FixedPoint> project_to_wall_slice(const SliceSpec& spec, const FixedPoint& p, const Root& root);
// Swaps delta_i and delta_{i+1}; 1 <= i < l.
FixedPoint adjacent_transposition(const FixedPoint& p, int i);

// Fixed points of a slice with their tangent weights, computed once.
class FixedLocus {
 public:
  explicit FixedLocus(SliceSpec spec);

  const SliceSpec& spec() const { return spec_; }
  int nvars() const { return spec_.nvars(); }
  int size() const { return static_cast<int>(points_.size()); }
  int dimension() const { return dim_; }
  const std::vector<FixedPoint>& points() const { return points_; }
  const FixedPoint& point(int idx) const { return points_.at(idx); }
  const WeightMultiset& tangent(int idx) const { return tangent_.at(idx); }
  // -1 when the point is not in the locus.
  int index_of(const FixedPoint& p) const;
  Polynomial euler_class_at(int idx) const { return euler_class(tangent(idx), nvars()); }
  LinearFactors euler_factors_at(int idx) const { return euler_factors(tangent(idx), nvars()); }
  // Repelling part of T_x for the chamber.
  WeightMultiset repelling(int idx, const Chamber& ch) const;

 private:
  SliceSpec spec_;
  std::vector<FixedPoint> points_;
  std::vector<WeightMultiset> tangent_;
  std::map<FixedPoint, int> index_;
  int dim_;
};

// A polarization: eps_x = signs[x] * e_A(N^{-reference}_x).
struct Polarization {
  Chamber reference;
  std::vector<int> signs;
};

Polarization repelling_polarization(const FixedLocus& locus, const Chamber& ch);
// Sign of eps_x relative to e_A(N^{-ch}_x).
int polarization_sign(const FixedLocus& locus, const Polarization& pol, int idx, const Chamber& ch);
Polynomial polarization_value(const FixedLocus& locus, const Polarization& pol, int idx);
// (-1)^{dim/2} eps, re-expressed relative to the opposite reference chamber.
Polarization dual_polarization(const FixedLocus& locus, const Polarization& pol);

// Sums sum_x v1(x) v2(x) / e_T(T_x) over a fixed locus, using one common
// denominator for all fixed points.
class LocalizationPairing {
 public:
  explicit LocalizationPairing(const FixedLocus& locus);
  const LinearFactors& common_denominator() const { return common_; }
  // The sum multiplied by the common denominator, a polynomial.
  Polynomial numerator(const std::vector<Polynomial>& v1, const std::vector<Polynomial>& v2) const;
  RationalFunction pair(const std::vector<Polynomial>& v1, const std::vector<Polynomial>& v2) const;

 private:
  LinearFactors common_;
  std::vector<Polynomial> cofactors_;
};

}  // namespace slicestab
