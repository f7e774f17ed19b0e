#include "slicestab/stab_general.hpp"

#include <algorithm>
#include <random>

#include "slicestab/errors.hpp"
#include "slicestab/stab_a1.hpp"

namespace slicestab {

namespace {

std::optional<Root> root_of_coroot(const CartanDatum& cd, const Coweight& c) {
  for (const auto& r : cd.roots())
    if (cd.coroot_of(r) == c) return r;
  return std::nullopt;
}

bool on_root_line(const std::optional<Root>& found, const Root& root) {
  return found && (*found == root || *found == -root);
}

// Product of the A-parts of the C-repelling weights at x whose root is not +-root.
Polynomial transverse_euler_a(const FixedLocus& locus, int x, const Chamber& c, const Root& root) {
  WeightMultiset rest;
  for (const auto& [w, m] : locus.repelling(x, c))
    if (w.root != root && w.root != -root) rest[w] = m;
  return euler_class_a(rest, locus.nvars());
}

std::string pair_label(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

std::optional<AdjacencyWitness> find_adjacency(const SliceSpec& spec, const FixedPoint& p, const FixedPoint& q,
                                               const Chamber& ch) {
  if (p.length() != q.length()) return std::nullopt;
  std::vector<int> diff;
  for (int k = 1; k <= p.length(); ++k)
    if (p.delta(k) != q.delta(k)) diff.push_back(k);
  if (diff.size() != 2) return std::nullopt;
  const Coweight alpha = p.delta(diff[0]) - q.delta(diff[0]);
  if (q.delta(diff[1]) - p.delta(diff[1]) != alpha) return std::nullopt;
  const auto root = root_of_coroot(spec.cartan(), alpha);
  if (!root || ch.sign_of(*root) < 0) return std::nullopt;
  return AdjacencyWitness{diff[0], diff[1], alpha, *root};
}

Chamber wall_chamber(const CartanPtr& cartan, const Root& root, int side, std::uint64_t seed) {
  const CartanDatum& cd = *cartan;
  if (!cd.is_root(root)) throw std::invalid_argument("wall_chamber: not a root");
  const Coweight& coroot = cd.coroot_of(root);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-9, 9);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Coweight c(cd.rank());
    for (auto& x : c) x = coord(rng);
    // Projection of 2c onto the hyperplane of the root; stays integral.
    const Coweight w = 2 * c - pairing(c, root) * coroot;
    bool generic = true;
    for (const auto& b : cd.roots())
      if (b != root && b != -root && pairing(w, b) == 0) generic = false;
    if (!generic) continue;
    // Integral pairings of w with other roots are at least 1 in size and a
    // coroot pairs to at most 3 with any root, so 4w +- coroot stays in the
    // chamber touching the wall at w.
    return Chamber(cartan, to_rational(4 * w + (side > 0 ? 1 : -1) * coroot));
  }
  throw ComputationError("no generic point found on a root hyperplane");
}

RationalFunction omega_ratio(const FixedLocus& locus, int p, int q, const Root& root) {
  if (!on_root_line(same_wall_component(locus.spec(), locus.point(p), locus.point(q)), root))
    throw ComputationError("points " + pair_label(p, q) + " are not on a common wall component");
  const CartanPtr& cd = locus.spec().cartan_ptr();
  std::optional<RationalFunction> first;
  for (int side : {1, -1}) {
    const Chamber c = wall_chamber(cd, root, side);
    RationalFunction r(euler_class_a(locus.repelling(q, c), locus.nvars()),
                       euler_factors_a(locus.repelling(p, c), locus.nvars()));
    if (!first) first = r;
    else if (*first != r) throw ComputationError("wall ratio depends on the side of the wall");
  }
  return *first;
}

int sigma_sign(const FixedLocus& locus, int p, int q, const Polarization& pol, const Chamber& wall_ch) {
  return polarization_sign(locus, pol, p, wall_ch) * polarization_sign(locus, pol, q, wall_ch);
}

int sigma_sign(const FixedLocus& locus, int p, int q, const Root& root, const Polarization& pol) {
  return sigma_sign(locus, p, q, pol, wall_chamber(locus.spec().cartan_ptr(), root, 1));
}

const ModH2Entry* ModH2Matrix::find(int p, int q) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), std::make_pair(p, q),
                             [](const ModH2Entry& e, const std::pair<int, int>& k) {
                               return std::make_pair(e.p, e.q) < k;
                             });
  return it != entries.end() && it->p == p && it->q == q ? &*it : nullptr;
}

ModH2Matrix stab_mod_h2(const FixedLocus& locus, const Chamber& ch, const Polarization& pol) {
  const SliceSpec& spec = locus.spec();
  const int nv = locus.nvars();
  const Polynomial h = Polynomial::h(nv);
  ModH2Matrix m{locus.points(), ch, {}};
  std::map<Root, Chamber> wall_cache;
  for (int p = 0; p < locus.size(); ++p) {
    const Polynomial eps = polarization_value(locus, pol, p);
    for (int q = 0; q < locus.size(); ++q) {
      if (p == q) continue;
      auto adj = find_adjacency(spec, locus.point(p), locus.point(q), ch);
      if (!adj) continue;
      auto it = wall_cache.find(adj->alpha_form);
      if (it == wall_cache.end())
        it = wall_cache.emplace(adj->alpha_form, wall_chamber(spec.cartan_ptr(), adj->alpha_form, 1)).first;
      const Chamber& c = it->second;
      const Polynomial num = h * euler_class_a(locus.repelling(q, c), nv) * eps;
      const Polynomial den = euler_class_a(locus.repelling(p, c), nv) * Polynomial::linear(to_rational(adj->alpha_form), 0);
      auto value = try_exact_div(num, den);
      if (!value) throw ExactDivisionFailure("mod-h^2 restriction " + pair_label(p, q) + " is not polynomial");
      m.entries.push_back(ModH2Entry{p, q, *adj, std::move(*value)});
    }
  }
  return m;
}

std::vector<std::string> check_cross_oracle(const FixedLocus& locus, const ModH2Matrix& m, const Polarization& pol) {
  std::vector<std::string> fails;
  const SliceSpec& spec = locus.spec();
  const int nv = locus.nvars();
  const CartanPtr a1 = CartanDatum::make('A', 1);
  const Chamber a1_ch = Chamber::dominant(a1);
  std::map<std::pair<std::vector<int>, Coweight>, FixedLocus> wall_loci;
  for (const auto& e : m.entries) {
    const std::string at = pair_label(e.p, e.q);
    const Root& root = e.adjacency.alpha_form;
    if (!on_root_line(same_wall_component(spec, locus.point(e.p), locus.point(e.q)), root)) {
      fails.push_back("entry " + at + " is not on the wall component of its root");
      continue;
    }
    const Chamber c = wall_chamber(spec.cartan_ptr(), root, 1);
    auto [slice, p1] = project_to_wall_slice(spec, locus.point(e.p), root);
    const FixedPoint q1 = project_to_wall_slice(spec, locus.point(e.q), root).second;
    auto cached = wall_loci.find(std::make_pair(slice.lambda_seq(), slice.mu()));
    if (cached == wall_loci.end())
      cached = wall_loci.emplace(std::make_pair(slice.lambda_seq(), slice.mu()), FixedLocus(slice)).first;
    const FixedLocus& wall = cached->second;
    const int ip = wall.index_of(p1);
    const int iq = wall.index_of(q1);
    if (ip < 0 || iq < 0) {
      fails.push_back("entry " + at + " has no image in the rank-one slice");
      continue;
    }
    const std::vector<Polynomial> to_ambient{Polynomial::linear(to_rational(root), 0)};

    // The weights along the root at p must be those of the rank-one slice.
    WeightMultiset along;
    for (const auto& [w, mult] : locus.tangent(e.p))
      if (w.root == root || w.root == -root) along[w] = mult;
    if (euler_class(along, nv) != euler_class(wall.tangent(ip), 2).substitute_a(to_ambient))
      fails.push_back("entry " + at + ": tangent weights along the root differ from the rank-one slice");

    const Polynomial eps1_p = transverse_euler_a(locus, e.p, c, root);
    const Polynomial eps1_q = transverse_euler_a(locus, e.q, c, root);
    const auto eps2_p = try_exact_div(polarization_value(locus, pol, e.p), eps1_p);
    if (!eps2_p) {
      fails.push_back("entry " + at + ": polarization does not factor along the wall");
      continue;
    }
    const Polynomial base = euler_class_a(wall.repelling(ip, a1_ch), 2).substitute_a(to_ambient);
    const auto ratio = try_exact_div(*eps2_p, base);
    if (!ratio || !ratio->is_constant() || abs(ratio->constant_term()) != 1) {
      fails.push_back("entry " + at + ": wall part of the polarization is not a sign");
      continue;
    }
    Polarization wall_pol = repelling_polarization(wall, a1_ch);
    wall_pol.signs[ip] = sign(ratio->constant_term());
    const auto closed = offdiag_mod_h2_entry(wall, a1_ch, wall_pol, ip, iq);
    if (!closed) {
      fails.push_back("entry " + at + " is not adjacent in the rank-one slice");
      continue;
    }
    if (eps1_q * closed->substitute_a(to_ambient) != e.value)
      fails.push_back("entry " + at + " differs from the rank-one factorization");
  }
  return fails;
}

std::vector<std::string> check_wall_crossing(const FixedLocus& locus, const Chamber& ch, const Polarization& pol) {
  std::vector<std::string> fails;
  const SliceSpec& spec = locus.spec();
  const ModH2Matrix here = stab_mod_h2(locus, ch, pol);
  for (const auto& beta : ch.wall_roots()) {
    const Chamber other_ch = ch.reflected_across(beta);
    const ModH2Matrix there = stab_mod_h2(locus, other_ch, pol);
    for (int p = 0; p < locus.size(); ++p) {
      for (int q = 0; q < locus.size(); ++q) {
        if (p == q || on_root_line(same_wall_component(spec, locus.point(p), locus.point(q)), beta)) continue;
        const ModH2Entry* a = here.find(p, q);
        const ModH2Entry* b = there.find(p, q);
        const bool same = (!a && !b) || (a && b && a->value == b->value);
        if (!same)
          fails.push_back("pair " + pair_label(p, q) + " changes across the wall of " + Polynomial::linear(to_rational(beta), 0).to_string());
      }
    }
  }
  return fails;
}

}  // namespace slicestab
