#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "slicestab/rational.hpp"

namespace slicestab {

// Coweights are integer vectors in the fundamental-coweight basis; roots are
// integer vectors in the simple-root basis. The pairing of the two is the
// plain dot product.
using Coweight = IntVec;
using Root = IntVec;
// Rational linear form on the coweight lattice, simple-root basis.
using AWeightForm = RatVec;

int pairing(const Coweight& c, const Root& r);
Rational pairing(const RatVec& c, const RatVec& f);
Rational pairing(const RatVec& c, const Root& r);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
IntVec operator*(int s, const IntVec& a);
bool is_zero(const IntVec& v);

// Root datum of a simple adjoint group. Immutable after construction.
class CartanDatum {
 public:
  // Throws ValidationError for an unknown type or an out-of-range rank.
  static std::shared_ptr<const CartanDatum> make(char type_letter, int rank);

  char type_letter() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  // cartan_matrix()[i][j] = <alpha_i, alpha^vee_j>: simple root i evaluated
  // on simple coroot j.
  const std::vector<IntVec>& cartan_matrix() const { return a_; }
  const RatVec& symmetrizers() const { return d_; }
  // All roots, sorted; positive ones are those with nonnegative coordinates.
  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root> dominant_positive_roots() const;
  bool is_root(const Root& r) const;
  const Coweight& coroot_of(const Root& r) const;
  // 1-based indices of minuscule fundamental coweights.
  const std::vector<int>& minuscule_indices() const { return minuscule_; }
  bool is_minuscule(int index) const;
  Root highest_root() const;

  // index is 1-based; index 0 gives the zero coweight.
  Coweight fundamental_coweight(int index) const;
  Coweight simple_coroot(int j) const;  // 0-based
  Root simple_root(int j) const;        // 0-based

  Coweight reflect(const Coweight& c, int j) const;
  RatVec reflect(const RatVec& c, int j) const;
  Root reflect_root(const Root& r, int j) const;
  // Reflection in the hyperplane of an arbitrary root.
  RatVec reflect_by_root(const RatVec& c, const Root& r) const;
  std::vector<Coweight> weyl_orbit(const Coweight& c) const;  // sorted
  Coweight dominant_representative(const Coweight& c) const;

  // Weyl-invariant form on coweights, shortest coroot of squared length 2.
  Rational inner(const RatVec& c1, const RatVec& c2) const;
  Rational inner(const Coweight& c1, const Coweight& c2) const;
  // The linear form c' -> inner(c, c').
  AWeightForm sharp(const RatVec& c) const;
  AWeightForm sharp(const Coweight& c) const;

  // Sum of the dominant-positive roots (the form 2 rho^vee).
  Root two_rho() const;
  // Coordinates of a coweight in the simple-coroot basis.
  RatVec in_coroot_basis(const RatVec& c) const;

 private:
  CartanDatum(char type, int rank, std::vector<IntVec> a, std::vector<int> minuscule);

  char type_;
  int rank_;
  std::vector<IntVec> a_;
  RatVec d_;
  std::vector<std::vector<Rational>> a_inv_;
  std::vector<Root> roots_;
  std::map<Root, Coweight> coroot_;
  std::vector<int> minuscule_;
};

using CartanPtr = std::shared_ptr<const CartanDatum>;

// A Weyl chamber, given by a rational witness coweight off every root
// hyperplane. Two chambers are equal when their root sign vectors agree.
class Chamber {
 public:
  Chamber() = default;
  Chamber(CartanPtr cartan, RatVec witness);  // throws WitnessOnWall
  static Chamber dominant(CartanPtr cartan);
  static Chamber antidominant(CartanPtr cartan);

  const RatVec& witness() const { return witness_; }
  const CartanDatum& cartan() const { return *cartan_; }
  const CartanPtr& cartan_ptr() const { return cartan_; }
  // +1 or -1; sign of the witness on the root.
  int sign_of(const Root& r) const;
  const std::vector<int>& sign_vector() const { return signs_; }
  std::vector<Root> positive_roots() const;
  // Roots spanning the walls of this chamber (simple for its positive system).
  std::vector<Root> wall_roots() const;
  Chamber opposite() const;
  // Neighbouring chamber across the wall of the given root.
  Chamber reflected_across(const Root& r) const;

  bool operator==(const Chamber& other) const { return signs_ == other.signs_; }

 private:
  CartanPtr cartan_;
  RatVec witness_;
  std::vector<int> signs_;
};

}  // namespace slicestab
