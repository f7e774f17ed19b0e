#include "slicestab/stab_a1.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>

#include "slicestab/errors.hpp"

namespace slicestab {

namespace {

const Root kAlpha{1};

void require_a1(const SliceSpec& spec, bool allow_zero_slots) {
  if (!spec.is_a1()) throw NotA1("rank-one stable envelopes need type A1, got " + spec.cartan().name());
  if (!allow_zero_slots)
    for (int idx : spec.lambda_seq())
      if (idx == 0) throw InvalidSpec("zero slots are not supported by the recursion");
}

// a + n h in the two variables (a, h).
Polynomial a_plus(const Rational& n) { return Polynomial::linear({Rational(1)}, n); }

int height(const Coweight& c) { return c.at(0); }

Polynomial eps_of(const FixedLocus& locus, const RestrictionMatrix& m, int p) {
  return euler_class_a(locus.repelling(p, m.chamber), locus.nvars()) * Rational(m.polarization_signs.at(p));
}

std::vector<std::vector<RationalFunction>> reduced_rows(const FixedLocus& locus, const RestrictionMatrix& m) {
  const int n = locus.size();
  std::vector<std::vector<RationalFunction>> red(n);
  for (int p = 0; p < n; ++p) {
    const LinearFactors eps = euler_factors_a(locus.repelling(p, m.chamber), locus.nvars());
    const Rational s = m.polarization_signs[p];
    for (int q = 0; q < n; ++q) red[p].push_back(RationalFunction(m.entries[p][q] * s, eps));
  }
  return red;
}

bool h_divisible(const Polynomial& p) {
  for (const auto& [e, c] : p.terms())
    if (e.back() < 1) return false;
  return true;
}

std::string pair_label(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

FixedPoint minimal_point(const SliceSpec& spec, const Chamber& ch) {
  require_a1(spec, false);
  const int s = ch.sign_of(kAlpha);
  const int l = spec.length();
  const int k = spec.mu().at(0);
  const int lowered = s > 0 ? (l - k) / 2 : (l + k) / 2;
  std::vector<Coweight> delta;
  for (int i = 0; i < l; ++i) delta.push_back(Coweight{i < lowered ? -s : s});
  return FixedPoint(std::move(delta));
}

Rational weight_stat(const FixedPoint& p, const Chamber& ch) {
  const int s = ch.sign_of(kAlpha);
  int total = 0;
  for (int i = 0; i <= p.length(); ++i) total += height(p.sigma(i));
  Rational r(s * total, 2);
  r.canonicalize();
  return r;
}

std::vector<RationalFunction> recursion_step(const FixedLocus& locus, const std::vector<RationalFunction>& row, int i) {
  const Polynomial h = Polynomial::h(2);
  std::vector<RationalFunction> out;
  out.reserve(row.size());
  for (int q = 0; q < locus.size(); ++q) {
    const FixedPoint& pq = locus.point(q);
    const int rq = locus.index_of(adjacent_transposition(pq, i));
    const Polynomial before = a_plus(height(pq.sigma(i - 1)));
    const Polynomial after = a_plus(height(pq.sigma(i)));
    RationalFunction v = row.at(q) * RationalFunction(h * Rational(-height(pq.delta(i)))) +
                         row.at(rq) * RationalFunction(after);
    out.push_back(v / LinearFactors::of(before));
  }
  return out;
}

StabBuild build_stab(const FixedLocus& locus, const Chamber& ch, const Polarization& pol) {
  require_a1(locus.spec(), false);
  const int n = locus.size();
  const int l = locus.spec().length();
  const int s = ch.sign_of(kAlpha);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> stat(n);
  for (int p = 0; p < n; ++p) stat[p] = weight_stat(locus.point(p), ch);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return stat[x] < stat[y]; });

  const int pmin = locus.index_of(minimal_point(locus.spec(), ch));
  if (pmin < 0 || pmin != order.front()) throw ComputationError("minimal point is not the lowest fixed point");

  StabBuild out;
  std::vector<std::optional<std::vector<RationalFunction>>> red(n);
  {
    std::vector<RationalFunction> base(n, RationalFunction(locus.nvars()));
    const WeightMultiset rep = locus.repelling(pmin, ch);
    base[pmin] = RationalFunction(euler_class(rep, locus.nvars()), euler_factors_a(rep, locus.nvars()));
    red[pmin] = std::move(base);
  }
  for (int p : order) {
    if (!red[p]) throw ComputationError("fixed point not reached by raising transpositions");
    const FixedPoint& pt = locus.point(p);
    for (int i = 1; i < l; ++i) {
      if (height(pt.delta(i)) != -s || height(pt.delta(i + 1)) != s) continue;
      const int rp = locus.index_of(adjacent_transposition(pt, i));
      auto row = recursion_step(locus, *red[p], i);
      if (red[rp]) {
        if (*red[rp] != row) throw PathInconsistency("two raising paths disagree at point " + std::to_string(rp));
        ++out.path_agreements;
      } else {
        red[rp] = std::move(row);
      }
    }
  }

  RestrictionMatrix& m = out.matrix;
  m.points = locus.points();
  m.chamber = ch;
  m.entries.assign(n, std::vector<Polynomial>(n, Polynomial(locus.nvars())));
  for (int p = 0; p < n; ++p) {
    m.polarization_signs.push_back(polarization_sign(locus, pol, p, ch));
    const RationalFunction eps(polarization_value(locus, pol, p));
    for (int q = 0; q < n; ++q) {
      try {
        m.entries[p][q] = ((*red[p])[q] * eps).to_polynomial();
      } catch (const ExactDivisionFailure& e) {
        throw ExactDivisionFailure("restriction " + pair_label(p, q) + " is not polynomial: " + e.what());
      }
    }
    out.reduced.push_back(std::move(*red[p]));
  }
  return out;
}

RestrictionMatrix stab_matrix(const FixedLocus& locus, const Chamber& ch, const Polarization& pol) {
  return build_stab(locus, ch, pol).matrix;
}

std::vector<int> lower_closure(const FixedLocus& locus, int p, const Chamber& ch) {
  const int s = ch.sign_of(kAlpha);
  const int l = locus.spec().length();
  std::set<int> seen{p};
  std::deque<int> queue{p};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    const FixedPoint& pt = locus.point(x);
    for (int i = 1; i < l; ++i) {
      if (height(pt.delta(i)) != s || height(pt.delta(i + 1)) != -s) continue;
      const int y = locus.index_of(adjacent_transposition(pt, i));
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::string> check_restriction_invariants(const FixedLocus& locus, const RestrictionMatrix& m) {
  std::vector<std::string> fails;
  const int n = locus.size();
  const int half = locus.dimension() / 2;
  for (int p = 0; p < n; ++p) {
    const auto below = lower_closure(locus, p, m.chamber);
    const Rational sp = weight_stat(locus.point(p), m.chamber);
    const Polynomial diag =
        euler_class(locus.repelling(p, m.chamber), locus.nvars()) * Rational(m.polarization_signs[p]);
    if (m.entries[p][p] != diag) fails.push_back("diagonal " + pair_label(p, p) + " differs from the repelling Euler class");
    for (int q = 0; q < n; ++q) {
      const Polynomial& v = m.entries[p][q];
      if (q == p || v.is_zero()) continue;
      const bool lower = weight_stat(locus.point(q), m.chamber) < sp &&
                         std::binary_search(below.begin(), below.end(), q);
      if (!lower) fails.push_back("support " + pair_label(p, q) + " outside the lower closure");
      if (!h_divisible(v)) fails.push_back("entry " + pair_label(p, q) + " not divisible by h");
      if (v.deg_a() >= half) fails.push_back("entry " + pair_label(p, q) + " violates the A-degree bound");
    }
  }
  return fails;
}

std::optional<Polynomial> offdiag_mod_h2_entry(const FixedLocus& locus, const Chamber& ch, const Polarization& pol,
                                               int p, int q) {
  require_a1(locus.spec(), true);
  if (p == q) return std::nullopt;
  const int s = ch.sign_of(kAlpha);
  const FixedPoint& pp = locus.point(p);
  const FixedPoint& pq = locus.point(q);
  std::vector<int> diff;
  for (int i = 1; i <= pp.length(); ++i)
    if (pp.delta(i) != pq.delta(i)) diff.push_back(i);
  if (diff.size() != 2) return std::nullopt;
  const int di = height(pq.delta(diff[0])) - height(pp.delta(diff[0]));
  const int dj = height(pq.delta(diff[1])) - height(pp.delta(diff[1]));
  if (di != -2 * s || dj != 2 * s) return std::nullopt;
  const Polynomial alpha_ch = Polynomial::linear({Rational(s)}, 0);
  return exact_div(Polynomial::h(2) * polarization_value(locus, pol, p), alpha_ch);
}

std::map<std::pair<int, int>, Polynomial> stab_offdiag_mod_h2(const FixedLocus& locus, const Chamber& ch,
                                                              const Polarization& pol) {
  std::map<std::pair<int, int>, Polynomial> out;
  for (int p = 0; p < locus.size(); ++p)
    for (int q = 0; q < locus.size(); ++q)
      if (auto v = offdiag_mod_h2_entry(locus, ch, pol, p, q)) out.emplace(std::make_pair(p, q), std::move(*v));
  return out;
}

std::vector<Rational> diagonal_constants(const FixedLocus& locus, const RestrictionMatrix& m) {
  const int s = m.chamber.sign_of(kAlpha);
  const Polynomial alpha_ch = Polynomial::linear({Rational(s)}, 0);
  std::vector<Rational> out;
  for (int p = 0; p < locus.size(); ++p) {
    const Polynomial& d = m.entries[p][p];
    const Polynomial ratio = exact_div(d.h_coefficient(1) * alpha_ch, d.h_coefficient(0));
    if (!ratio.is_constant()) throw ComputationError("diagonal first-order term is not a multiple of h/alpha");
    out.push_back(ratio.constant_term() - weight_stat(locus.point(p), m.chamber));
  }
  return out;
}

ThetaResult theta_action(const FixedLocus& locus, int i, const RestrictionMatrix& m) {
  const int n = locus.size();
  if (i < 1 || i >= locus.spec().length()) throw std::out_of_range("theta index out of range");
  ThetaResult out;
  out.left.assign(n, std::vector<RationalFunction>(n, RationalFunction(locus.nvars())));
  out.right = out.left;
  for (int p = 0; p < n; ++p) {
    const int rp = locus.index_of(adjacent_transposition(locus.point(p), i));
    const Polynomial ratio = exact_div(eps_of(locus, m, p), eps_of(locus, m, rp));
    if (!ratio.is_constant() || abs(ratio.constant_term()) != 1)
      throw ComputationError("polarization ratio along a transposition is not a sign");
    for (int q = 0; q < n; ++q) {
      const FixedPoint& pq = locus.point(q);
      const int rq = locus.index_of(adjacent_transposition(pq, i));
      out.left[p][q] = RationalFunction(m.entries[rp][q] * ratio.constant_term() - m.entries[p][q]);
      const Polynomial before = a_plus(height(pq.sigma(i - 1)));
      const Polynomial after = a_plus(height(pq.sigma(i)));
      out.right[p][q] = RationalFunction(after * (m.entries[p][rq] - m.entries[p][q]), LinearFactors::of(before));
    }
  }
  out.agree = out.left == out.right;
  return out;
}

std::vector<std::string> check_reverse_recursion(const FixedLocus& locus, const RestrictionMatrix& m) {
  std::vector<std::string> fails;
  const auto red = reduced_rows(locus, m);
  const Polynomial h = Polynomial::h(2);
  for (int i = 1; i < locus.spec().length(); ++i) {
    for (int p = 0; p < locus.size(); ++p) {
      const int rp = locus.index_of(adjacent_transposition(locus.point(p), i));
      for (int q = 0; q < locus.size(); ++q) {
        const FixedPoint& pq = locus.point(q);
        const int rq = locus.index_of(adjacent_transposition(pq, i));
        const Polynomial before = a_plus(height(pq.sigma(i - 1)));
        const Polynomial after = a_plus(height(pq.sigma(i)));
        RationalFunction rhs = red[p][q] * RationalFunction(h * Rational(height(pq.delta(i)))) +
                               red[rp][q] * RationalFunction(before);
        rhs /= LinearFactors::of(after);
        if (rhs != red[p][rq])
          fails.push_back("reverse recursion fails at i=" + std::to_string(i) + " " + pair_label(p, q));
      }
    }
  }
  return fails;
}

DualityReport verify_duality(const FixedLocus& locus, const Chamber& ch, const Polarization& pol) {
  const RestrictionMatrix plus = stab_matrix(locus, ch, pol);
  const RestrictionMatrix minus = stab_matrix(locus, ch.opposite(), dual_polarization(locus, pol));
  const LocalizationPairing pairing(locus);
  const Polynomial common = pairing.common_denominator().to_polynomial();
  const Polynomial zero(locus.nvars());
  DualityReport report;
  for (int q = 0; q < locus.size(); ++q) {
    for (int p = 0; p < locus.size(); ++p) {
      ++report.pairs_checked;
      if (pairing.numerator(minus.entries[q], plus.entries[p]) != (q == p ? common : zero))
        report.failures.push_back("pairing " + pair_label(q, p) + " is not the Kronecker delta");
    }
  }
  return report;
}

}  // namespace slicestab
