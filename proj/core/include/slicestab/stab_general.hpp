#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slicestab/slices.hpp"

namespace slicestab {

// q is obtained from p by moving the coroot alpha from slot i to slot j:
// delta_q^i = delta_p^i - alpha, delta_q^j = delta_p^j + alpha, 1 <= i < j <= l.
struct AdjacencyWitness {
  int i = 0;
  int j = 0;
  Coweight alpha;   // coroot, positive for the chamber
  Root alpha_form;  // the matching root
};

std::optional<AdjacencyWitness> find_adjacency(const SliceSpec& spec, const FixedPoint& p, const FixedPoint& q,
                                               const Chamber& ch);

inline constexpr std::uint64_t kWallSeed = 20240601;

// A chamber touching the hyperplane of the root at a generic point of it.
// side = +1 puts the root on the positive side. Different seeds give
// different generic points.
Chamber wall_chamber(const CartanPtr& cartan, const Root& root, int side, std::uint64_t seed = kWallSeed);

// e_A(N^{-C}_q) / e_A(N^{-C}_p) for a chamber C adjacent to the root's wall.
// Throws ComputationError when p and q are not on a common wall component
// of the root, or when the two sides of the wall disagree.
RationalFunction omega_ratio(const FixedLocus& locus, int p, int q, const Root& root);

// sign(C, eps)(p) * sign(C, eps)(q) for the given wall-adjacent chamber.
int sigma_sign(const FixedLocus& locus, int p, int q, const Polarization& pol, const Chamber& wall_ch);
int sigma_sign(const FixedLocus& locus, int p, int q, const Root& root, const Polarization& pol);

struct ModH2Entry {
  int p = 0;
  int q = 0;
  AdjacencyWitness adjacency;
  Polynomial value;
};

// Off-diagonal restrictions Stab[p]|_q mod h^2, sorted by (p, q).
struct ModH2Matrix {
  std::vector<FixedPoint> points;
  Chamber chamber;
  std::vector<ModH2Entry> entries;
  const ModH2Entry* find(int p, int q) const;
};

ModH2Matrix stab_mod_h2(const FixedLocus& locus, const Chamber& ch, const Polarization& pol);

// Recomputes every entry from the rank-one slice of its wall component and
// the part of the polarization transverse to the wall. Returns failures.
std::vector<std::string> check_cross_oracle(const FixedLocus& locus, const ModH2Matrix& m, const Polarization& pol);

// For every wall of ch, compares the outputs on both sides of it for pairs
// not on a common component of that wall. Returns failures.
std::vector<std::string> check_wall_crossing(const FixedLocus& locus, const Chamber& ch, const Polarization& pol);

}  // namespace slicestab
