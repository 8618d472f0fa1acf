#pragma once

// JSON forms of the library values. Scalars travel as their text rendering and
// are read back with parse_rational; symbols travel by name.

#include <json.hpp>

#include "qsp/staralg.hpp"

namespace qsp {

using Json = nlohmann::ordered_json;

Json to_json(const RationalQ& c);
Json to_json(const RankTwoData& d);
Json to_json(const Monomial& m, const SymbolTable* t);
Json to_json(const CoeffPoly& c);
Json to_json(const OrthoPoly& p);
Json to_json(const FWord& w);
Json to_json(const StarElement& e);

RationalQ rational_from_json(const Json& j);
RankTwoData data_from_json(const Json& j);
Monomial monomial_from_json(const Json& j, const TablePtr& table);
CoeffPoly coeff_from_json(const Json& j, const TablePtr& table);
OrthoPoly poly_from_json(const Json& j, const TablePtr& table);
FWord word_from_json(const Json& j);
StarElement star_from_json(const Json& j, const TablePtr& table);

}  // namespace qsp
