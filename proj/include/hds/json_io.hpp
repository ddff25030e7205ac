#pragma once

#include "hds/branch.hpp"

#include <json.hpp>

namespace hds {

using Json = nlohmann::json;

// Rationals are always JSON strings; counts and ids are JSON integers.
Json to_json(const Rational &q);
Json to_json(const Weight &w);
Json to_json(const std::vector<Weight> &ws);
Json to_json(const HermitianPair &pair);
Json to_json(const Chamber &c);
Json to_json(const RepDecomposition &rep);
Json to_json(const AdmissibilityVerdict &v);
Json to_json(const HMultResult &r);

/// Accepts an array of rational strings (or integers). Throws
/// std::invalid_argument on arity mismatch or malformed entries.
Weight weight_from_json(const Json &j, Ambient ambient, std::size_t dim);

/// {"name", "projection": [[...]], "h_type", "flags": {...},
///  optional "h_ambient" ("typeA"|"euclidean") and "h_positives"}.
/// h_type "A<k>" builds SU(k+1) on k+1 type-A coordinates, "torus" has no
/// roots, "K" reuses the compact datum; anything else needs h_positives.
Subgroup subgroup_from_json(const HermitianPair &pair, const Json &j);

} // namespace hds
