#include "slicestab/cartan.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "slicestab/errors.hpp"

namespace slicestab {

int pairing(const Coweight& c, const Root& r) {
  if (c.size() != r.size()) throw std::invalid_argument("pairing: rank mismatch");
  int s = 0;
  for (size_t i = 0; i < c.size(); ++i) s += c[i] * r[i];
  return s;
}

Rational pairing(const RatVec& c, const RatVec& f) {
  if (c.size() != f.size()) throw std::invalid_argument("pairing: rank mismatch");
  Rational s = 0;
  for (size_t i = 0; i < c.size(); ++i) s += c[i] * f[i];
  return s;
}

Rational pairing(const RatVec& c, const Root& r) {
  if (c.size() != r.size()) throw std::invalid_argument("pairing: rank mismatch");
  Rational s = 0;
  for (size_t i = 0; i < c.size(); ++i) s += c[i] * r[i];
  return s;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  IntVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
IntVec operator-(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  IntVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
IntVec operator-(const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x = -x;
  return r;
}
IntVec operator*(int s, const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x *= s;
  return r;
}
bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

namespace {

std::vector<IntVec> chain(int n) {
  std::vector<IntVec> a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

// Exceptional types in Bourbaki numbering: 1-3-4-5-..., node 2 on node 4.
std::vector<IntVec> type_e(int n) {
  std::vector<IntVec> a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
  link(1, 3);
  link(2, 4);
  for (int i = 3; i < n; ++i) link(i, i + 1);
  return a;
}

std::vector<std::vector<Rational>> invert(const std::vector<IntVec>& m) {
  const size_t n = m.size();
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w[i][j] = m[i][j];
    w[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (w[piv][c] == 0) ++piv;
    std::swap(w[piv], w[c]);
    Rational inv = 1 / w[c][c];
    for (auto& x : w[c]) x *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == c || w[r][c] == 0) continue;
      Rational f = w[r][c];
      for (size_t k = 0; k < 2 * n; ++k) w[r][k] -= f * w[c][k];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = w[i][n + j];
  return out;
}

}  // namespace

std::shared_ptr<const CartanDatum> CartanDatum::make(char type, int n) {
  std::vector<IntVec> a;
  std::vector<int> mins;
  auto bad = [&]() {
    return ValidationError(std::string("unsupported Cartan type ") + type + std::to_string(n));
  };
  switch (type) {
    case 'A':
      if (n < 1) throw bad();
      a = chain(n);
      for (int i = 1; i <= n; ++i) mins.push_back(i);
      break;
    case 'B':
      if (n < 2) throw bad();
      a = chain(n);
      a[n - 2][n - 1] = -2;
      mins = {1};
      break;
    case 'C':
      if (n < 2) throw bad();
      a = chain(n);
      a[n - 1][n - 2] = -2;
      mins = {n};
      break;
    case 'D':
      if (n < 4) throw bad();
      a = chain(n);
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      mins = {1, n - 1, n};
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      a = type_e(n);
      if (n == 6) mins = {1, 6};
      if (n == 7) mins = {7};
      break;
    case 'F':
      if (n != 4) throw bad();
      a = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
      break;
    case 'G':
      if (n != 2) throw bad();
      a = {{2, -1}, {-3, 2}};
      break;
    default:
      throw bad();
  }
  return std::shared_ptr<const CartanDatum>(new CartanDatum(type, n, std::move(a), std::move(mins)));
}

CartanDatum::CartanDatum(char type, int rank, std::vector<IntVec> a, std::vector<int> minuscule)
    : type_(type), rank_(rank), a_(std::move(a)), minuscule_(std::move(minuscule)) {
  // Symmetrizers by propagation along the (connected) Dynkin diagram.
  d_.assign(rank_, 0);
  d_[0] = 1;
  std::deque<int> todo{0};
  while (!todo.empty()) {
    int i = todo.front();
    todo.pop_front();
    for (int j = 0; j < rank_; ++j) {
      if (j == i || a_[i][j] == 0 || d_[j] != 0) continue;
      d_[j] = d_[i] * a_[i][j] / a_[j][i];
      todo.push_back(j);
    }
  }
  Rational lo = *std::min_element(d_.begin(), d_.end());
  for (auto& x : d_) x /= lo;

  a_inv_ = invert(a_);

  std::set<Root> seen;
  std::deque<Root> queue;
  for (int j = 0; j < rank_; ++j) {
    Root r = simple_root(j);
    coroot_[r] = simple_coroot(j);
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    const Coweight cr = coroot_.at(r);
    for (int k = 0; k < rank_; ++k) {
      Root s = reflect_root(r, k);
      if (seen.insert(s).second) {
        coroot_[s] = reflect(cr, k);
        queue.push_back(s);
      }
    }
  }
  roots_.assign(seen.begin(), seen.end());
}

std::string CartanDatum::name() const { return std::string(1, type_) + std::to_string(rank_); }

std::vector<Root> CartanDatum::dominant_positive_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) out.push_back(r);
  return out;
}

bool CartanDatum::is_root(const Root& r) const { return coroot_.count(r) > 0; }

const Coweight& CartanDatum::coroot_of(const Root& r) const {
  auto it = coroot_.find(r);
  if (it == coroot_.end()) throw std::invalid_argument("coroot_of: not a root");
  return it->second;
}

bool CartanDatum::is_minuscule(int index) const {
  return std::find(minuscule_.begin(), minuscule_.end(), index) != minuscule_.end();
}

Root CartanDatum::highest_root() const {
  Root best;
  int height = -1;
  for (const auto& r : roots_) {
    int h = 0;
    for (int x : r) h += x;
    if (h > height) {
      height = h;
      best = r;
    }
  }
  return best;
}

Coweight CartanDatum::fundamental_coweight(int index) const {
  if (index < 0 || index > rank_) throw ValidationError("coweight index out of range: " + std::to_string(index));
  Coweight c(rank_, 0);
  if (index > 0) c[index - 1] = 1;
  return c;
}

Coweight CartanDatum::simple_coroot(int j) const {
  Coweight c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = a_[i][j];
  return c;
}

Root CartanDatum::simple_root(int j) const {
  Root r(rank_, 0);
  r[j] = 1;
  return r;
}

Coweight CartanDatum::reflect(const Coweight& c, int j) const {
  Coweight out(c);
  const int t = c[j];
  for (int i = 0; i < rank_; ++i) out[i] -= t * a_[i][j];
  return out;
}

RatVec CartanDatum::reflect(const RatVec& c, int j) const {
  RatVec out(c);
  const Rational t = c[j];
  for (int i = 0; i < rank_; ++i) out[i] -= t * a_[i][j];
  return out;
}

Root CartanDatum::reflect_root(const Root& r, int j) const {
  int t = 0;
  for (int i = 0; i < rank_; ++i) t += r[i] * a_[i][j];
  Root out(r);
  out[j] -= t;
  return out;
}

RatVec CartanDatum::reflect_by_root(const RatVec& c, const Root& r) const {
  const Coweight& cr = coroot_of(r);
  Rational t = pairing(c, r);
  RatVec out(c);
  for (int i = 0; i < rank_; ++i) out[i] -= t * cr[i];
  return out;
}

std::vector<Coweight> CartanDatum::weyl_orbit(const Coweight& c) const {
  std::set<Coweight> seen{c};
  std::deque<Coweight> queue{c};
  while (!queue.empty()) {
    Coweight v = queue.front();
    queue.pop_front();
    for (int j = 0; j < rank_; ++j) {
      Coweight w = reflect(v, j);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return {seen.begin(), seen.end()};
}

Coweight CartanDatum::dominant_representative(const Coweight& c) const {
  Coweight v(c);
  for (;;) {
    auto it = std::find_if(v.begin(), v.end(), [](int x) { return x < 0; });
    if (it == v.end()) return v;
    v = reflect(v, static_cast<int>(it - v.begin()));
  }
}

RatVec CartanDatum::in_coroot_basis(const RatVec& c) const {
  RatVec x(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) x[i] += a_inv_[i][j] * c[j];
  return x;
}

// With c' = sum_j x_j alpha_j one has (c, alpha_j) = d_j c_j, hence
// (c, c') = sum_j x_j d_j c_j with x = A^{-1} c'.
Rational CartanDatum::inner(const RatVec& c1, const RatVec& c2) const {
  return pairing(c2, sharp(c1));
}

Rational CartanDatum::inner(const Coweight& c1, const Coweight& c2) const {
  return inner(to_rational(c1), to_rational(c2));
}

AWeightForm CartanDatum::sharp(const RatVec& c) const {
  AWeightForm s(rank_, 0);
  for (int k = 0; k < rank_; ++k)
    for (int j = 0; j < rank_; ++j) s[k] += a_inv_[j][k] * d_[j] * c[j];
  return s;
}

AWeightForm CartanDatum::sharp(const Coweight& c) const { return sharp(to_rational(c)); }

Root CartanDatum::two_rho() const {
  Root s(rank_, 0);
  for (const auto& r : dominant_positive_roots()) s = s + r;
  return s;
}

Chamber::Chamber(CartanPtr cartan, RatVec witness) : cartan_(std::move(cartan)), witness_(std::move(witness)) {
  if (static_cast<int>(witness_.size()) != cartan_->rank())
    throw ValidationError("chamber witness has wrong length");
  signs_.reserve(cartan_->roots().size());
  for (const auto& r : cartan_->roots()) {
    int s = sign(pairing(witness_, r));
    if (s == 0) throw WitnessOnWall("chamber witness lies on a root hyperplane");
    signs_.push_back(s);
  }
}

Chamber Chamber::dominant(CartanPtr cartan) {
  RatVec w(cartan->rank(), 1);
  return Chamber(std::move(cartan), std::move(w));
}

Chamber Chamber::antidominant(CartanPtr cartan) {
  RatVec w(cartan->rank(), -1);
  return Chamber(std::move(cartan), std::move(w));
}

int Chamber::sign_of(const Root& r) const {
  int s = sign(pairing(witness_, r));
  if (s == 0) throw WitnessOnWall("root pairs to zero with chamber witness");
  return s;
}

std::vector<Root> Chamber::positive_roots() const {
  std::vector<Root> out;
  const auto& roots = cartan_->roots();
  for (size_t i = 0; i < roots.size(); ++i)
    if (signs_[i] > 0) out.push_back(roots[i]);
  return out;
}

std::vector<Root> Chamber::wall_roots() const {
  std::vector<Root> pos = positive_roots();
  std::set<Root> pos_set(pos.begin(), pos.end());
  std::vector<Root> out;
  for (const auto& b : pos) {
    bool decomposable = false;
    for (const auto& b1 : pos) {
      if (b1 != b && pos_set.count(b - b1)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(b);
  }
  return out;
}

Chamber Chamber::opposite() const {
  RatVec w(witness_);
  for (auto& x : w) x = -x;
  return Chamber(cartan_, std::move(w));
}

Chamber Chamber::reflected_across(const Root& r) const {
  return Chamber(cartan_, cartan_->reflect_by_root(witness_, r));
}

}  // namespace slicestab
