#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicestab/slices.hpp"

namespace slicestab {

// Restrictions Stab_{ch,eps}[p]|_q, indexed by fixed-point positions.
struct RestrictionMatrix {
  std::vector<FixedPoint> points;
  Chamber chamber;
  // eps_p = polarization_signs[p] * e_A(N^{-chamber}_p).
  std::vector<int> polarization_signs;
  // entries[p][q] = Stab[p]|_q
  std::vector<std::vector<Polynomial>> entries;
};

// Everything the rank-one recursion produces, including the reduced rows
// Stab[p]|_q / eps_p and the number of rows reached along two or more paths.
struct StabBuild {
  RestrictionMatrix matrix;
  std::vector<std::vector<RationalFunction>> reduced;
  int path_agreements = 0;
};

// The point with every -omega_ch increment first.
FixedPoint minimal_point(const SliceSpec& spec, const Chamber& ch);
// (1/2) sum_i <alpha_ch^vee, sigma_i>.
Rational weight_stat(const FixedPoint& p, const Chamber& ch);

// Reduced row of r_i(p) from the reduced row of p (rows indexed by the locus).
std::vector<RationalFunction> recursion_step(const FixedLocus& locus, const std::vector<RationalFunction>& row, int i);

// Throws NotA1, InvalidSpec (zero slots), ExactDivisionFailure, PathInconsistency.
StabBuild build_stab(const FixedLocus& locus, const Chamber& ch, const Polarization& pol);
RestrictionMatrix stab_matrix(const FixedLocus& locus, const Chamber& ch, const Polarization& pol);

// Failure messages for triangularity, diagonal, h-divisibility and the
// A-degree bound; empty when all hold.
std::vector<std::string> check_restriction_invariants(const FixedLocus& locus, const RestrictionMatrix& m);

// Points reachable from p by adjacent transpositions lowering weight_stat.
std::vector<int> lower_closure(const FixedLocus& locus, int p, const Chamber& ch);

// Off-diagonal restrictions mod h^2 from the adjacency rule; (p, q) -> value.
std::map<std::pair<int, int>, Polynomial> stab_offdiag_mod_h2(const FixedLocus& locus, const Chamber& ch,
                                                              const Polarization& pol);
// The same rule for a single pair.
std::optional<Polynomial> offdiag_mod_h2_entry(const FixedLocus& locus, const Chamber& ch, const Polarization& pol,
                                               int p, int q);

// The constant C in Stab[p]|_p / eps_p = 1 + (|p| + C) h / alpha_ch^vee mod h^2,
// for every point; equal entries are expected.
std::vector<Rational> diagonal_constants(const FixedLocus& locus, const RestrictionMatrix& m);

// Theta^i applied to each Stab[p], restricted at each q: from the left action
// on stable classes and from the right action on restrictions.
struct ThetaResult {
  std::vector<std::vector<RationalFunction>> left;
  std::vector<std::vector<RationalFunction>> right;
  bool agree = false;
};
ThetaResult theta_action(const FixedLocus& locus, int i, const RestrictionMatrix& m);

// Checks Red[p](r_i q) against the reverse relation expressing it through
// Red[p](q) and Red[r_i p](q), for all p, q and i.
std::vector<std::string> check_reverse_recursion(const FixedLocus& locus, const RestrictionMatrix& m);

struct DualityReport {
  int pairs_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
// sum_x Stab_{-ch,eps^vee}[q]|_x Stab_{ch,eps}[p]|_x / e_T(T_x) = delta_{qp}.
DualityReport verify_duality(const FixedLocus& locus, const Chamber& ch, const Polarization& pol);

}  // namespace slicestab
