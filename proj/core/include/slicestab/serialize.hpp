#pragma once

#include <nlohmann/json.hpp>

#include "slicestab/chern.hpp"
#include "slicestab/slices.hpp"
#include "slicestab/stab_a1.hpp"
#include "slicestab/stab_general.hpp"

namespace slicestab {

using Json = nlohmann::ordered_json;

// {"a1^2*h": "-3/2", "1": "4"}; monomials with exponent 1 are written bare.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, int nvars);  // throws ValidationError

Json to_json(const IntVec& v);
Json to_json(const RatVec& v);
// Array of increment coordinate vectors.
Json to_json(const FixedPoint& p);
FixedPoint fixed_point_from_json(const Json& j);
// [{"root": [...], "n": n, "mult": m}, ...]
Json to_json(const WeightMultiset& ws);
WeightMultiset weight_multiset_from_json(const Json& j);
Json to_json(const Chamber& ch);

// {"points", "chamber", "polarization_signs", "entries": {"p,q": poly}};
// zero entries are omitted.
Json to_json(const RestrictionMatrix& m);
// {"points", "chamber", "entries": [{"p", "q", "alpha", "value"}]}
Json to_json(const ModH2Matrix& m);
// {"basis", "bundle", "entries": [[poly, ...], ...]}
Json to_json(const OperatorMatrix& m);

// Dense matrix from the "entries" object of a serialized RestrictionMatrix.
std::vector<std::vector<Polynomial>> restriction_entries_from_json(const Json& j, int size, int nvars);

}  // namespace slicestab
