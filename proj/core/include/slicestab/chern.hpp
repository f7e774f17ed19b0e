#pragma once

#include <string>
#include <vector>

#include "slicestab/slices.hpp"
#include "slicestab/stab_a1.hpp"

namespace slicestab {

// a_part + h_coeff * h.
struct EquivariantLinearForm {
  AWeightForm a_part;
  Rational h_coeff;

  Polynomial to_polynomial() const { return Polynomial::linear(a_part, h_coeff); }
  bool operator==(const EquivariantLinearForm&) const = default;
};

EquivariantLinearForm operator+(const EquivariantLinearForm& x, const EquivariantLinearForm& y);
EquivariantLinearForm operator-(const EquivariantLinearForm& x, const EquivariantLinearForm& y);

// Weight of L_i at p, 0 <= i <= l.
EquivariantLinearForm line_bundle_weight(const SliceSpec& spec, const FixedPoint& p, int i);
// Weight of E_i = L_i / L_{i-1} at p, 1 <= i <= l.
EquivariantLinearForm e_bundle_weight(const SliceSpec& spec, const FixedPoint& p, int i);

// A tautological bundle: L_k (0 <= k <= l) or E_k (1 <= k <= l).
struct Bundle {
  char kind = 'L';
  int index = 0;

  static Bundle parse(const std::string& text);  // "L3", "E2"; throws InvalidSpec
  std::string to_string() const;
  EquivariantLinearForm weight(const SliceSpec& spec, const FixedPoint& p) const;
};

// entries[p][q] is the coefficient of the basis vector q in the image of p.
struct OperatorMatrix {
  std::vector<FixedPoint> basis;
  Chamber chamber;
  std::string label;
  std::vector<std::vector<Polynomial>> entries;

  bool operator==(const OperatorMatrix& o) const { return basis == o.basis && entries == o.entries; }
};

OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y);

// Diagonal: 1_p -> [sharp(delta_i) + (1/2)(delta_i, mu) h] 1_p.
OperatorMatrix h_operator(const FixedLocus& locus, int i);
// Omega_ij = (1/2) Omega^0_ij + sum over chamber-positive alpha of Omega^{-alpha}_ij, 1 <= i < j <= l.
OperatorMatrix omega_operator(const FixedLocus& locus, int i, int j, const Chamber& ch, const Polarization& pol);
OperatorMatrix omega0_operator(const FixedLocus& locus, int i, int j);

// Classical multiplication by c_1 of the bundle in the stable basis.
OperatorMatrix mult_matrix(const FixedLocus& locus, const Bundle& bundle, const Chamber& ch, const Polarization& pol);

// sum_x v1(x) v2(x) / e_T(T_x).
RationalFunction localization_pair(const FixedLocus& locus, const std::vector<Polynomial>& v1,
                                   const std::vector<Polynomial>& v2);

// Solves c_1|_x Stab[p]|_x = sum_q M[p][q] Stab[q]|_x from exact restrictions
// (type A1). Throws NonPolynomialEntry when an entry is not a polynomial.
OperatorMatrix mult_matrix_via_localization(const FixedLocus& locus, const Bundle& bundle, const RestrictionMatrix& stab);
OperatorMatrix mult_matrix_via_localization(const FixedLocus& locus, const Bundle& bundle, const Chamber& ch,
                                            const Polarization& pol);

// Compares the h-linear off-diagonal coefficients of mult_matrix with the
// ones reconstructed from the mod-h^2 restrictions. Returns failures.
std::vector<std::string> check_mult_against_restrictions(const FixedLocus& locus, const Bundle& bundle,
                                                         const Chamber& ch, const Polarization& pol);

}  // namespace slicestab
