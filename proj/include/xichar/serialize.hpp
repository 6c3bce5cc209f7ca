#ifndef XICHAR_SERIALIZE_HPP
#define XICHAR_SERIALIZE_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "xichar/eulerchar.hpp"
#include "xichar/jack.hpp"
#include "xichar/maporacle.hpp"
#include "xichar/mapseries.hpp"

namespace xichar {

using json = nlohmann::ordered_json;

// Rationals are "p/q" strings, polynomials arrays of such strings by degree,
// partitions arrays of parts.
json to_json(const Rational& r);
json to_json(const UniPoly& p);
json to_json(const Partition& mu);
// A polynomial in alpha as an array; a proper fraction as {"num": [...], "den": [...]}.
json to_json(const AlphaFn& f);

json to_json(const MapCountTable& table);
json to_json(const std::map<MapKey, Rational>& specialized);
json to_json(const std::map<MapKey, long long>& census);
json to_json(const GammaPoly& xi);
json to_json(const JackRecord& rec);
json to_json(const LambdaValues& v);
// patterns may be empty; each entry is an already formatted gluing word.
json to_json(const GlueCensus& census, const std::vector<std::string>& patterns = {});

// CSV: i,j,n,c0,c1,... with the vertex distribution space-separated.
std::string to_csv(const MapCountTable& table);
std::string to_csv(const std::map<MapKey, Rational>& specialized);
// One row per line as in the published layout, e.g. "(0,0,0,1)  1  2  1 + b + 3*b^2".
std::string to_pretty(const MapCountTable& table);
std::string to_pretty(const std::map<MapKey, Rational>& specialized);

}  // namespace xichar

#endif
