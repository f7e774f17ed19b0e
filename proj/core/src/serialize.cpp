#include "slicestab/serialize.hpp"

#include "slicestab/errors.hpp"

namespace slicestab {

Json to_json(const Polynomial& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[Polynomial::monomial_key(e)] = to_string(c);
  return out;
}

Polynomial polynomial_from_json(const Json& j, int nvars) {
  if (!j.is_object()) throw ValidationError("polynomial must be a JSON object");
  Polynomial out(nvars);
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw ValidationError("coefficient of " + key + " must be a string");
    out += Polynomial::monomial(Polynomial::parse_monomial_key(key, nvars), parse_rational(value.get<std::string>()));
  }
  return out;
}

Json to_json(const IntVec& v) { return Json(std::vector<int>(v.begin(), v.end())); }

Json to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const FixedPoint& p) {
  Json out = Json::array();
  for (const auto& d : p.deltas()) out.push_back(to_json(d));
  return out;
}

FixedPoint fixed_point_from_json(const Json& j) {
  try {
    return FixedPoint(j.get<std::vector<Coweight>>());
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad fixed point: ") + e.what());
  }
}

Json to_json(const WeightMultiset& ws) {
  Json out = Json::array();
  for (const auto& [w, m] : ws) out.push_back(Json{{"root", to_json(w.root)}, {"n", w.n}, {"mult", m}});
  return out;
}

WeightMultiset weight_multiset_from_json(const Json& j) {
  try {
    WeightMultiset ws;
    for (const auto& item : j)
      ws[TorusWeight{item.at("root").get<Root>(), item.at("n").get<int>()}] += item.at("mult").get<int>();
    return ws;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad weight multiset: ") + e.what());
  }
}

Json to_json(const Chamber& ch) { return Json{{"witness", to_json(ch.witness())}}; }

namespace {

Json points_json(const std::vector<FixedPoint>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

}  // namespace

Json to_json(const RestrictionMatrix& m) {
  Json entries = Json::object();
  for (size_t p = 0; p < m.entries.size(); ++p)
    for (size_t q = 0; q < m.entries[p].size(); ++q)
      if (!m.entries[p][q].is_zero()) entries[std::to_string(p) + "," + std::to_string(q)] = to_json(m.entries[p][q]);
  return Json{{"points", points_json(m.points)},
              {"chamber", to_json(m.chamber)},
              {"polarization_signs", m.polarization_signs},
              {"entries", entries}};
}

Json to_json(const ModH2Matrix& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries)
    entries.push_back(Json{{"p", e.p}, {"q", e.q}, {"alpha", to_json(e.adjacency.alpha_form)}, {"value", to_json(e.value)}});
  return Json{{"points", points_json(m.points)}, {"chamber", to_json(m.chamber)}, {"entries", entries}};
}

Json to_json(const OperatorMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(std::move(r));
  }
  return Json{{"basis", points_json(m.basis)}, {"bundle", m.label}, {"entries", rows}};
}

std::vector<std::vector<Polynomial>> restriction_entries_from_json(const Json& j, int size, int nvars) {
  std::vector<std::vector<Polynomial>> out(size, std::vector<Polynomial>(size, Polynomial(nvars)));
  for (const auto& [key, value] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw ValidationError("bad entry key " + key);
    const int p = std::stoi(key.substr(0, comma));
    const int q = std::stoi(key.substr(comma + 1));
    if (p < 0 || q < 0 || p >= size || q >= size) throw ValidationError("entry key out of range: " + key);
    out[p][q] = polynomial_from_json(value, nvars);
  }
  return out;
}

}  // namespace slicestab
