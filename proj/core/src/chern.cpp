#include "slicestab/chern.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "slicestab/errors.hpp"
#include "slicestab/stab_general.hpp"

namespace slicestab {

namespace {

std::string pair_label(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

OperatorMatrix zero_operator(const FixedLocus& locus, const Chamber& ch, std::string label) {
  const int n = locus.size();
  return OperatorMatrix{locus.points(), ch, std::move(label),
                        std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n, Polynomial(locus.nvars())))};
}

EquivariantLinearForm h_eigenvalue(const SliceSpec& spec, const FixedPoint& p, int i) {
  const auto& cd = spec.cartan();
  return {cd.sharp(p.delta(i)), cd.inner(p.delta(i), spec.mu()) / 2};
}

void check_bundle(const SliceSpec& spec, const Bundle& b) {
  const int lo = b.kind == 'L' ? 0 : 1;
  if (b.index < lo || b.index > spec.length())
    throw InvalidSpec("bundle " + b.to_string() + " out of range for length " + std::to_string(spec.length()));
}

// Adds coeff * Omega_ij to m, with Omega_ij = (1/2) Omega^0_ij + sum_alpha Omega^{-alpha}_ij.
class OmegaBuilder {
 public:
  OmegaBuilder(const FixedLocus& locus, const Chamber& ch, const Polarization& pol)
      : locus_(locus), pol_(pol), positive_(ch.positive_roots()) {}

  void add(OperatorMatrix& m, int i, int j, const Polynomial& coeff) {
    const auto& cd = locus_.spec().cartan();
    for (int p = 0; p < locus_.size(); ++p) {
      const FixedPoint& pt = locus_.point(p);
      m.entries[p][p] += coeff * (cd.inner(pt.delta(i), pt.delta(j)) / 2);
      for (const auto& root : positive_) {
        if (pairing(pt.delta(i), root) != 1 || pairing(pt.delta(j), root) != -1) continue;
        const Coweight& alpha = cd.coroot_of(root);
        auto delta = pt.deltas();
        delta[i - 1] = delta[i - 1] - alpha;
        delta[j - 1] = delta[j - 1] + alpha;
        const int q = locus_.index_of(FixedPoint(std::move(delta)));
        if (q < 0) throw ComputationError("adjacent point missing from the fixed locus");
        const Rational c = sigma_sign(locus_, p, q, pol_, wall(root)) * cd.inner(alpha, alpha) / 2;
        m.entries[p][q] += coeff * c;
      }
    }
  }

 private:
  const Chamber& wall(const Root& root) {
    auto it = walls_.find(root);
    if (it == walls_.end()) it = walls_.emplace(root, wall_chamber(locus_.spec().cartan_ptr(), root, 1)).first;
    return it->second;
  }

  const FixedLocus& locus_;
  const Polarization& pol_;
  std::vector<Root> positive_;
  std::map<Root, Chamber> walls_;
};

}  // namespace

EquivariantLinearForm operator+(const EquivariantLinearForm& x, const EquivariantLinearForm& y) {
  AWeightForm a(x.a_part.size());
  for (size_t k = 0; k < a.size(); ++k) a[k] = x.a_part[k] + y.a_part.at(k);
  return {a, x.h_coeff + y.h_coeff};
}

EquivariantLinearForm operator-(const EquivariantLinearForm& x, const EquivariantLinearForm& y) {
  AWeightForm a(x.a_part.size());
  for (size_t k = 0; k < a.size(); ++k) a[k] = x.a_part[k] - y.a_part.at(k);
  return {a, x.h_coeff - y.h_coeff};
}

EquivariantLinearForm line_bundle_weight(const SliceSpec& spec, const FixedPoint& p, int i) {
  if (i < 0 || i > p.length()) throw std::out_of_range("line bundle index out of range");
  const auto& cd = spec.cartan();
  const Coweight& s = p.sigma(i);
  return {cd.sharp(s), cd.inner(s, s) / 2};
}

EquivariantLinearForm e_bundle_weight(const SliceSpec& spec, const FixedPoint& p, int i) {
  if (i < 1 || i > p.length()) throw std::out_of_range("bundle index out of range");
  return line_bundle_weight(spec, p, i) - line_bundle_weight(spec, p, i - 1);
}

Bundle Bundle::parse(const std::string& text) {
  static const std::regex re("([LE])([0-9]{1,6})");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidSpec("bundle must look like L<k> or E<k>, got '" + text + "'");
  return Bundle{m[1].str()[0], std::stoi(m[2].str())};
}

std::string Bundle::to_string() const { return std::string(1, kind) + std::to_string(index); }

EquivariantLinearForm Bundle::weight(const SliceSpec& spec, const FixedPoint& p) const {
  return kind == 'L' ? line_bundle_weight(spec, p, index) : e_bundle_weight(spec, p, index);
}

OperatorMatrix operator*(const OperatorMatrix& x, const OperatorMatrix& y) {
  const size_t n = x.entries.size();
  if (y.entries.size() != n) throw std::invalid_argument("operator size mismatch");
  const int nv = n ? x.entries[0][0].nvars() : 1;
  OperatorMatrix out{x.basis, x.chamber, x.label + "*" + y.label,
                     std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n, Polynomial(nv)))};
  for (size_t p = 0; p < n; ++p)
    for (size_t r = 0; r < n; ++r) {
      if (x.entries[p][r].is_zero()) continue;
      for (size_t q = 0; q < n; ++q)
        if (!y.entries[r][q].is_zero()) out.entries[p][q] += x.entries[p][r] * y.entries[r][q];
    }
  return out;
}

OperatorMatrix h_operator(const FixedLocus& locus, int i) {
  if (i < 1 || i > locus.spec().length()) throw std::out_of_range("H index out of range");
  OperatorMatrix m = zero_operator(locus, Chamber(), "H" + std::to_string(i));
  for (int p = 0; p < locus.size(); ++p) m.entries[p][p] = h_eigenvalue(locus.spec(), locus.point(p), i).to_polynomial();
  return m;
}

OperatorMatrix omega0_operator(const FixedLocus& locus, int i, int j) {
  const auto& cd = locus.spec().cartan();
  OperatorMatrix m = zero_operator(locus, Chamber(), "Omega0_" + std::to_string(i) + std::to_string(j));
  for (int p = 0; p < locus.size(); ++p)
    m.entries[p][p] = Polynomial::constant(locus.nvars(), cd.inner(locus.point(p).delta(i), locus.point(p).delta(j)));
  return m;
}

OperatorMatrix omega_operator(const FixedLocus& locus, int i, int j, const Chamber& ch, const Polarization& pol) {
  if (i < 1 || i >= j || j > locus.spec().length()) throw std::out_of_range("Omega indices out of range");
  OperatorMatrix m = zero_operator(locus, ch, "Omega_" + std::to_string(i) + std::to_string(j));
  OmegaBuilder(locus, ch, pol).add(m, i, j, Polynomial::constant(locus.nvars(), 1));
  return m;
}

OperatorMatrix mult_matrix(const FixedLocus& locus, const Bundle& bundle, const Chamber& ch, const Polarization& pol) {
  const SliceSpec& spec = locus.spec();
  check_bundle(spec, bundle);
  const int l = spec.length();
  const int k = bundle.index;
  const Polynomial h = Polynomial::h(locus.nvars());
  OperatorMatrix m = zero_operator(locus, ch, bundle.to_string());

  // c_1 = sum_i a_i H_i + h sum_{i<j} b_ij Omega_ij.
  auto h_weight = [&](int i) { return bundle.kind == 'L' ? (i <= k ? 1 : 0) : (i == k ? 1 : 0); };
  auto omega_weight = [&](int i, int j) {
    if (bundle.kind == 'L') return i <= k && k < j ? -1 : 0;
    if (j == k) return 1;
    return i == k ? -1 : 0;
  };
  for (int p = 0; p < locus.size(); ++p)
    for (int i = 1; i <= l; ++i)
      if (h_weight(i)) m.entries[p][p] += h_eigenvalue(spec, locus.point(p), i).to_polynomial();
  OmegaBuilder omega(locus, ch, pol);
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j)
      if (const int b = omega_weight(i, j)) omega.add(m, i, j, h * Rational(b));
  return m;
}

RationalFunction localization_pair(const FixedLocus& locus, const std::vector<Polynomial>& v1,
                                   const std::vector<Polynomial>& v2) {
  return LocalizationPairing(locus).pair(v1, v2);
}

OperatorMatrix mult_matrix_via_localization(const FixedLocus& locus, const Bundle& bundle, const RestrictionMatrix& stab) {
  const SliceSpec& spec = locus.spec();
  if (!spec.is_a1()) throw NotA1("multiplication from exact restrictions needs type A1");
  check_bundle(spec, bundle);
  const int n = locus.size();
  const auto& s = stab.entries;
  std::vector<Polynomial> c;
  for (int x = 0; x < n; ++x) c.push_back(bundle.weight(spec, locus.point(x)).to_polynomial());

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> stat(n);
  for (int x = 0; x < n; ++x) stat[x] = weight_stat(locus.point(x), stab.chamber);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return stat[x] > stat[y]; });

  OperatorMatrix m = zero_operator(locus, stab.chamber, bundle.to_string());
  for (int p = 0; p < n; ++p) {
    std::vector<int> done;
    for (int x : order) {
      Polynomial rhs = c[x] * s[p][x];
      for (int q : done)
        if (!m.entries[p][q].is_zero() && !s[q][x].is_zero()) rhs -= m.entries[p][q] * s[q][x];
      auto v = try_exact_div(rhs, s[x][x]);
      if (!v) throw NonPolynomialEntry("multiplication coefficient " + pair_label(p, x) + " is not a polynomial");
      m.entries[p][x] = std::move(*v);
      done.push_back(x);
    }
  }
  return m;
}

OperatorMatrix mult_matrix_via_localization(const FixedLocus& locus, const Bundle& bundle, const Chamber& ch,
                                            const Polarization& pol) {
  return mult_matrix_via_localization(locus, bundle, stab_matrix(locus, ch, pol));
}

std::vector<std::string> check_mult_against_restrictions(const FixedLocus& locus, const Bundle& bundle,
                                                         const Chamber& ch, const Polarization& pol) {
  std::vector<std::string> fails;
  const SliceSpec& spec = locus.spec();
  const OperatorMatrix m = mult_matrix(locus, bundle, ch, pol);
  const ModH2Matrix r = stab_mod_h2(locus, ch, pol);
  const int nv = locus.nvars();
  const Polynomial h = Polynomial::h(nv);
  for (int p = 0; p < locus.size(); ++p) {
    const EquivariantLinearForm cp = bundle.weight(spec, locus.point(p));
    if (m.entries[p][p] != cp.to_polynomial()) fails.push_back("diagonal at " + std::to_string(p) + " is not the weight");
    for (int q = 0; q < locus.size(); ++q) {
      if (q == p) continue;
      Rational expected = 0;
      if (const ModH2Entry* e = r.find(p, q)) {
        const EquivariantLinearForm diff = bundle.weight(spec, locus.point(q)) - cp;
        const Polynomial num = Polynomial::linear(diff.a_part, 0) * e->value.h_coefficient(1);
        auto c = try_exact_div(num, polarization_value(locus, pol, q));
        if (!c || !c->is_constant()) {
          fails.push_back("reconstructed coefficient " + pair_label(p, q) + " is not a constant");
          continue;
        }
        expected = c->constant_term();
      }
      if (m.entries[p][q] != h * expected)
        fails.push_back("coefficient " + pair_label(p, q) + " differs from the restriction data");
    }
  }
  return fails;
}

}  // namespace slicestab
